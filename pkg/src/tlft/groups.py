"""Finite groups given by multiplication tables, and the label calculus of
pairs (g, h^) used to color edges (group element, dual group element)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product

import numpy as np


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    table: np.ndarray  # table[a, b] = index of a*b

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        n = t.shape[0]
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise GroupError("table must be a square array of element indices")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        # associativity: (a b) c == a (b c)
        left = t[t[:, :, None], np.arange(n)[None, None, :]]
        right = t[np.arange(n)[:, None, None], t[None, :, :]]
        if not (left == right).all():
            raise GroupError(f"{self.name}: table is not associative")
        ids = [e for e in range(n) if (t[e] == np.arange(n)).all() and (t[:, e] == np.arange(n)).all()]
        if len(ids) != 1:
            raise GroupError(f"{self.name}: no two-sided identity")
        if not all(sorted(row) == list(range(n)) for row in t.tolist()):
            raise GroupError(f"{self.name}: some element has no inverse")

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    @cached_property
    def identity(self) -> int:
        n = self.order
        return next(e for e in range(n) if (self.table[e] == np.arange(n)).all())

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmax(self.table == self.identity, axis=1)
        inv.setflags(write=False)
        return inv

    def mul(self, *xs) -> int:
        out = self.identity
        for x in xs:
            out = int(self.table[out, x])
        return out

    def inv(self, x) -> int:
        return int(self.inverse[x])

    def conj(self, g, h) -> int:
        """g h g^-1."""
        return int(self.table[self.table[g, h], self.inverse[g]])

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def elements(self) -> range:
        return range(self.order)


# constructors

def _from_elements(name, elems, op) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elems)}
    table = np.array([[index[op(a, b)] for b in elems] for a in elems], dtype=np.int64)
    return FiniteGroup(name, table)


def cyclic(n: int) -> FiniteGroup:
    return _from_elements(f"Z{n}", list(range(n)), lambda a, b: (a + b) % n)


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """Element (a, b) has index a * |B| + b."""
    elems = list(product(range(A.order), range(B.order)))
    return _from_elements(f"{A.name}x{B.name}", elems,
                          lambda x, y: (A.mul(x[0], y[0]), B.mul(x[1], y[1])))


def symmetric(n: int) -> FiniteGroup:
    """Permutations of 0..n-1 in lexicographic order; (p*q)(i) = p(q(i))."""
    elems = list(permutations(range(n)))
    return _from_elements(f"S{n}", elems, lambda p, q: tuple(p[q[i]] for i in range(n)))


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n: element (s, r) = x^s y^r with x a
    reflection and y a rotation."""
    elems = [(s, r) for s in (0, 1) for r in range(n)]

    def op(a, b):
        s1, r1 = a
        s2, r2 = b
        return ((s1 + s2) % 2, ((-r1 if s2 else r1) + r2) % n)
    return _from_elements(f"D{n}", elems, op)


def group_from_spec(spec: str) -> FiniteGroup:
    spec = spec.strip()
    if "x" in spec:
        parts = [group_from_spec(p) for p in spec.split("x")]
        out = parts[0]
        for p in parts[1:]:
            out = direct_product(out, p)
        return out
    if spec.startswith("Z") and spec[1:].isdigit() and int(spec[1:]) >= 1:
        return cyclic(int(spec[1:]))
    if spec.startswith("S") and spec[1:].isdigit() and 1 <= int(spec[1:]) <= 4:
        return symmetric(int(spec[1:]))
    if spec.startswith("D") and spec[1:].isdigit() and int(spec[1:]) >= 3:
        return dihedral(int(spec[1:]))
    raise GroupError(f"unknown group spec {spec!r}")


# label calculus

@dataclass(frozen=True)
class DoubleLabel:
    g: int  # group element
    h: int  # index of the dual element h^


def compose_labels(G: FiniteGroup, first: DoubleLabel, second: DoubleLabel) -> DoubleLabel:
    """Color of e3 where the path e1 = ``first`` = (k, l^) followed by
    e2 = ``second`` = (g, h^) runs from the tail of e1 to the head of e2.

    Admissible only if k^-1 h k = l; the result is (g k, l^)."""
    k, l = first.g, first.h
    g, h = second.g, second.h
    if G.mul(G.inv(k), h, k) != l:
        raise GroupError(f"inadmissible labels {first} then {second}")
    return DoubleLabel(G.mul(g, k), l)


def reverse_primal(G: FiniteGroup, c: DoubleLabel) -> DoubleLabel:
    """(g, h^) on an edge becomes (g^-1, (g h g^-1)^) on the reversed edge."""
    return DoubleLabel(G.inv(c.g), G.conj(c.g, c.h))


def reverse_dual(G: FiniteGroup, c: DoubleLabel) -> DoubleLabel:
    """(g, k^) on a dual edge becomes (g, (k^-1)^) on the reversed dual edge."""
    return DoubleLabel(c.g, G.inv(c.h))
