"""Cocycle data with values in the N-th roots of unity, stored as exponent
tables mod N.

* ``alpha[g, k, m, n]``  exponent of alpha(g, k, m; n^)
* ``beta[g, i, j, k]``   exponent of beta(g; i^, j^, k^)
* ``phi[g, k, m, n]``    exponent of phi(g, k; m^, n^)

Multiplicative identities become linear congruences mod N, which is what
``check_conditions`` evaluates and ``search_systems`` solves.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .groups import FiniteGroup, group_from_spec


class CocycleError(ValueError):
    pass


@dataclass(eq=False)
class CocycleSystem:
    group: FiniteGroup
    N: int
    alpha: np.ndarray
    beta: np.ndarray
    phi: np.ndarray

    def __post_init__(self):
        n = self.group.order
        for name in ("alpha", "beta", "phi"):
            t = np.asarray(getattr(self, name), dtype=np.int64) % self.N
            if t.shape != (n,) * 4:
                raise CocycleError(f"{name} table must have shape {(n,) * 4}")
            setattr(self, name, t)

    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.alpha.ravel(), self.beta.ravel(), self.phi.ravel()])

    @classmethod
    def from_vector(cls, G: FiniteGroup, N: int, vec) -> "CocycleSystem":
        vec = np.asarray(vec, dtype=np.int64)
        n4 = G.order ** 4
        if vec.shape != (3 * n4,):
            raise CocycleError("vector length does not match 3 |G|^4")
        shape = (G.order,) * 4
        return cls(G, N, vec[:n4].reshape(shape), vec[n4:2 * n4].reshape(shape),
                   vec[2 * n4:].reshape(shape))

    def __eq__(self, other):
        return (isinstance(other, CocycleSystem) and self.N == other.N
                and self.group.order == other.group.order
                and np.array_equal(self.group.table, other.group.table)
                and np.array_equal(self.to_vector(), other.to_vector()))


@dataclass(eq=False)
class DW3Cocycle:
    group: FiniteGroup
    N: int
    alpha3: np.ndarray

    def __post_init__(self):
        n = self.group.order
        t = np.asarray(self.alpha3, dtype=np.int64) % self.N
        if t.shape != (n,) * 3:
            raise CocycleError(f"alpha3 table must have shape {(n,) * 3}")
        self.alpha3 = t


def trivial_system(G: FiniteGroup, N: int) -> CocycleSystem:
    z = np.zeros((G.order,) * 4, dtype=np.int64)
    return CocycleSystem(G, N, z, z.copy(), z.copy())


def trivial_dw3(G: FiniteGroup, N: int) -> DW3Cocycle:
    return DW3Cocycle(G, N, np.zeros((G.order,) * 3, dtype=np.int64))


# Each relation is a list of (sign, table name, index arrays) over a grid of
# free group variables; it holds when the signed sum of exponents is 0 mod N.

def _grid(n, r):
    return [a.ravel() for a in np.meshgrid(*([np.arange(n)] * r), indexing="ij")]


def _condition_terms(G: FiniteGroup):
    n = G.order
    M, I = G.table, G.inverse

    def conj(a, b):
        return M[M[a, b], I[a]]

    g, k, m, p, q = _grid(n, 5)
    yield "i", (g, k, m, p, q), [
        (+1, "alpha", (k, m, p, q)), (+1, "alpha", (g, M[k, m], p, q)),
        (+1, "alpha", (g, k, m, conj(p, q))),
        (-1, "alpha", (M[g, k], m, p, q)), (-1, "alpha", (g, k, M[m, p], q))]
    g, i, j, k, l = _grid(n, 5)
    yield "ii", (g, i, j, k, l), [
        (+1, "beta", (g, j, k, l)), (+1, "beta", (g, i, M[j, k], l)), (+1, "beta", (g, i, j, k)),
        (-1, "beta", (g, M[i, j], k, l)), (-1, "beta", (g, i, j, M[k, l]))]
    g, k, m, p, q = _grid(n, 5)
    yield "iii", (g, k, m, p, q), [
        (+1, "alpha", (g, k, m, p)), (+1, "alpha", (g, k, m, q)),
        (+1, "phi", (k, m, p, q)), (+1, "phi", (g, M[k, m], p, q)),
        (-1, "phi", (g, k, conj(m, p), conj(m, q))), (-1, "phi", (M[g, k], m, p, q)),
        (-1, "alpha", (g, k, m, M[p, q]))]
    g, k, p, r, s = _grid(n, 5)
    yield "iv", (g, k, p, r, s), [
        (+1, "phi", (g, k, p, r)), (+1, "phi", (g, k, M[p, r], s)), (+1, "beta", (M[g, k], p, r, s)),
        (-1, "beta", (g, conj(k, p), conj(k, r), conj(k, s))), (-1, "beta", (k, p, r, s)),
        (-1, "phi", (g, k, r, s)), (-1, "phi", (g, k, p, M[r, s]))]


def _symmetry_terms(G: FiniteGroup, printed: bool = False):
    """Each symmetry says  x(args) = x(args')^-1, i.e. exponents add to 0.

    The forms are those produced by transposing two adjacent vertices of the
    underlying (dual) tetrahedron or triangle.  ``printed=True`` swaps in the
    two variants that differ from that derivation (last phi and last beta)."""
    n = G.order
    M, I = G.table, G.inverse

    def conj(a, b):
        return M[M[a, b], I[a]]

    g, k, m, x = _grid(n, 4)
    base = (g, k, m, x)
    yield "alpha.1", base, [(+1, "alpha", base), (+1, "alpha", (I[g], M[g, k], m, x))]
    yield "alpha.2", base, [(+1, "alpha", base), (+1, "alpha", (M[g, k], I[k], M[k, m], x))]
    yield "alpha.3", base, [(+1, "alpha", base), (+1, "alpha", (g, M[k, m], I[m], conj(m, x)))]
    g, k, m, l = _grid(n, 4)
    base = (g, k, m, l)
    yield "phi.1", base, [(+1, "phi", base), (+1, "phi", (I[g], M[g, k], m, l))]
    yield "phi.2", base, [(+1, "phi", base), (+1, "phi", (M[g, k], I[k], conj(k, m), conj(k, l)))]
    yield "phi.3", base, [(+1, "phi", base), (+1, "phi", (g, k, M[m, l], I[l]))]
    last = M[m, I[l]] if printed else M[m, l]
    yield "phi.4", base, [(+1, "phi", base), (+1, "phi", (g, k, I[m], last))]
    g, h, l, x = _grid(n, 4)
    base = (g, h, l, x)
    yield "beta.1", base, [(+1, "beta", base), (+1, "beta", (g, I[h], M[h, l], x))]
    yield "beta.2", base, [(+1, "beta", base), (+1, "beta", (g, M[h, l], I[l], M[l, x]))]
    if printed:
        yield "beta.3", base, [(+1, "beta", base), (+1, "beta", (g, h, l, I[x]))]
    else:
        yield "beta.3", base, [(+1, "beta", base), (+1, "beta", (g, h, M[l, x], I[x]))]


def _violations(sys: CocycleSystem, relations) -> list:
    out = []
    for cid, free, terms in relations:
        total = np.zeros_like(free[0])
        for sign, name, idx in terms:
            total = total + sign * getattr(sys, name)[idx]
        bad = np.nonzero(total % sys.N)[0]
        for b in bad:
            out.append((cid, tuple(int(v[b]) for v in free)))
    return sorted(out)


def check_conditions(sys: CocycleSystem) -> list:
    """Violated instances of the four cocycle conditions as (id, tuple)."""
    return _violations(sys, _condition_terms(sys.group))


def check_symmetries(sys: CocycleSystem, printed: bool = False) -> list:
    return _violations(sys, _symmetry_terms(sys.group, printed))


def check_dw3(c: DW3Cocycle) -> list:
    n = c.group.order
    M = c.group.table
    a = c.alpha3
    g, h, k, l = _grid(n, 4)
    total = a[h, k, l] - a[M[g, h], k, l] + a[g, M[h, k], l] - a[g, h, M[k, l]] + a[g, h, k]
    bad = np.nonzero(total % c.N)[0]
    return sorted(("dw3", (int(g[b]), int(h[b]), int(k[b]), int(l[b]))) for b in bad)


# linear algebra over Z/N

def relation_matrix(G: FiniteGroup, include_symmetries: bool, printed: bool = False) -> np.ndarray:
    """Integer matrix whose kernel mod N is the set of exponent vectors
    satisfying the conditions (and symmetries).  Columns follow
    CocycleSystem.to_vector; duplicate and zero rows are removed."""
    n4 = G.order ** 4
    offset = {"alpha": 0, "beta": n4, "phi": 2 * n4}
    weights = np.array([G.order ** 3, G.order ** 2, G.order, 1])
    blocks = []
    rels = list(_condition_terms(G))
    if include_symmetries:
        rels += list(_symmetry_terms(G, printed))
    for _, free, terms in rels:
        rows = np.zeros((len(free[0]), 3 * n4), dtype=np.int64)
        r = np.arange(len(free[0]))
        for sign, name, idx in terms:
            col = offset[name] + sum(w * np.asarray(i) for w, i in zip(weights, idx))
            np.add.at(rows, (r, col), sign)
        blocks.append(rows)
    A = np.concatenate(blocks)
    A = A[np.any(A != 0, axis=1)]
    return np.unique(A, axis=0)


def _unit_normalizer(a: int, N: int) -> int:
    """A unit u mod N with a*u = gcd(a, N) mod N."""
    g = gcd(a, N)
    m = N // g
    u = pow(a // g, -1, m) if m > 1 else 1
    while gcd(u, N) != 1:
        u += m
    return u % N


def smith_kernel(A: np.ndarray, N: int, column_order=None):
    """Diagonalize A mod N by unimodular row and column operations.

    Returns (generators, invariants): generators span {x : A x = 0 mod N} and
    invariants are gcd(d_i, N) for the diagonal entries d_i (i < rank), a complete description of the cokernel up to isomorphism."""
    A = np.array(A, dtype=np.int64) % N
    m, n = A.shape
    perm = np.arange(n) if column_order is None else np.asarray(column_order)
    A = A[:, perm]
    V = np.eye(n, dtype=np.int64)[:, perm]
    r = 0
    while r < min(m, n):
        sub = A[r:, r:]
        nz = np.nonzero(sub.any(axis=0))[0]
        if len(nz) == 0:
            break
        c = r + nz[0]
        col = A[r:, c]
        rows = np.nonzero(col)[0]
        best = rows[np.argmin([gcd(int(x), N) for x in col[rows]])] + r
        A[[r, best]] = A[[best, r]]
        A[:, [r, c]] = A[:, [c, r]]
        V[:, [r, c]] = V[:, [c, r]]
        while True:
            u = _unit_normalizer(int(A[r, r]), N)
            A[r] = (A[r] * u) % N
            d = int(A[r, r])
            # clear the column below the pivot
            below = np.nonzero(A[r + 1:, r])[0] + r + 1
            easy = [i for i in below if A[i, r] % d == 0]
            if easy:
                f = (A[easy, r] // d)[:, None]
                A[easy] = (A[easy] - f * A[r]) % N
            hard = [i for i in below if A[i, r] % d != 0]
            if hard:
                i = hard[0]
                b = int(A[i, r])
                g, s, t = _xgcd(d, b)
                ri, rr = A[i].copy(), A[r].copy()
                A[r] = (s * rr + t * ri) % N
                A[i] = ((-(b // g)) * rr + (d // g) * ri) % N
                continue
            # clear the row right of the pivot (only row r is touched)
            right = np.nonzero(A[r, r + 1:])[0] + r + 1
            easy = [j for j in right if A[r, j] % d == 0]
            if easy:
                f = (A[r, easy] // d)[None, :]
                V[:, easy] = (V[:, easy] - V[:, [r]] * f) % N
                A[:, easy] = (A[:, easy] - A[:, [r]] * f) % N
            hard = [j for j in right if A[r, j] % d != 0]
            if hard:
                j = hard[0]
                b = int(A[r, j])
                g, s, t = _xgcd(d, b)
                for X in (A, V):
                    cr, cj = X[:, r].copy(), X[:, j].copy()
                    X[:, r] = (s * cr + t * cj) % N
                    X[:, j] = ((-(b // g)) * cr + (d // g) * cj) % N
                continue
            break
        r += 1
    invariants = [gcd(int(A[i, i]), N) for i in range(r)]
    gens = []
    for i, d in enumerate(invariants):
        if d != 1:
            gens.append((V[:, i] * (N // d)) % N)
    for i in range(r, n):
        gens.append(V[:, i] % N)
    return gens, invariants


def _xgcd(a: int, b: int):
    """(g, s, t) with s a + t b = g = gcd(a, b) over the integers."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def solution_count(invariants, n_vars: int, N: int) -> int:
    """Number of solutions: N^(n_vars - rank) * prod gcd(d_i, N)."""
    size = N ** (n_vars - len(invariants))
    for d in invariants:
        size *= d
    return size


def search_systems(G: FiniteGroup, N: int, include_symmetries: bool = True,
                   printed: bool = False, column_order=None) -> list:
    """Generators of the Z/N-module of exponent vectors satisfying the
    cocycle conditions (and symmetries), as CocycleSystems."""
    A = relation_matrix(G, include_symmetries, printed)
    gens, _ = smith_kernel(A, N, column_order)
    return [CocycleSystem.from_vector(G, N, v) for v in gens]


def combine(systems, coefficients) -> CocycleSystem:
    """Z-linear combination of systems over the same group and N."""
    s0 = systems[0]
    vec = sum(int(c) * s.to_vector() for c, s in zip(coefficients, systems))
    return CocycleSystem.from_vector(s0.group, s0.N, vec)


# file format

def parse_cocycle(text: str) -> CocycleSystem:
    G = None
    N = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        w = line.split()
        if w[0] == "group" and len(w) == 2:
            G = group_from_spec(w[1])
        elif w[0] == "rootorder" and len(w) == 2:
            N = int(w[1])
        elif w[0] in ("alpha", "beta", "phi") and len(w) == 6:
            entries.append((lineno, w[0], tuple(int(x) for x in w[1:5]), int(w[5])))
        else:
            raise CocycleError(f"line {lineno}: cannot parse {raw!r}")
    if G is None or N is None or N < 1:
        raise CocycleError("cocycle file needs 'group' and 'rootorder' lines")
    sys = trivial_system(G, N)
    for lineno, name, idx, e in entries:
        if not all(0 <= i < G.order for i in idx) or not 0 <= e < N:
            raise CocycleError(f"line {lineno}: entry out of range")
        getattr(sys, name)[idx] = e
    return sys


def serialize_cocycle(sys: CocycleSystem, spec: str) -> str:
    lines = [f"group {spec}", f"rootorder {sys.N}"]
    for name in ("alpha", "beta", "phi"):
        t = getattr(sys, name)
        for idx in zip(*np.nonzero(t)):
            lines.append(f"{name} {' '.join(str(int(i)) for i in idx)} {int(t[idx])}")
    return "\n".join(lines) + "\n"


def parse_dw3(text: str) -> DW3Cocycle:
    G = None
    N = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        w = line.split()
        if w[0] == "group" and len(w) == 2:
            G = group_from_spec(w[1])
        elif w[0] == "rootorder" and len(w) == 2:
            N = int(w[1])
        elif w[0] == "alpha3" and len(w) == 5:
            entries.append((lineno, tuple(int(x) for x in w[1:4]), int(w[4])))
        else:
            raise CocycleError(f"line {lineno}: cannot parse {raw!r}")
    if G is None or N is None or N < 1:
        raise CocycleError("cocycle file needs 'group' and 'rootorder' lines")
    c = trivial_dw3(G, N)
    for lineno, idx, e in entries:
        if not all(0 <= i < G.order for i in idx) or not 0 <= e < N:
            raise CocycleError(f"line {lineno}: entry out of range")
        c.alpha3[idx] = e
    return c


def cubic_dw3(G: FiniteGroup) -> DW3Cocycle:
    """For G = Z/2: exponent g*h*k mod 2, the nontrivial class in H^3."""
    if G.order != 2:
        raise CocycleError("the cubic cocycle is defined for a group of order 2")
    g, h, k = np.meshgrid(range(2), range(2), range(2), indexing="ij")
    return DW3Cocycle(G, 2, g * h * k)


def carry_dw3(G: FiniteGroup, n: int, power: int = 1) -> DW3Cocycle:
    """For G = Z/n: exponent power * a * floor((b + c) / n) mod n, the standard
    generator of H^3(Z/n, Z/n) (times ``power``)."""
    if G.order != n or not G.is_abelian:
        raise CocycleError("carry cocycle needs the cyclic group of order n")
    a, b, c = np.meshgrid(range(n), range(n), range(n), indexing="ij")
    return DW3Cocycle(G, n, power * a * ((b + c) // n))


def dw3_relation_matrix(G: FiniteGroup) -> np.ndarray:
    n = G.order
    M = G.table
    g, h, k, l = _grid(n, 4)
    w = np.array([n * n, n, 1])
    rows = np.zeros((len(g), n ** 3), dtype=np.int64)
    r = np.arange(len(g))
    for sign, (a, b, c) in [(+1, (h, k, l)), (-1, (M[g, h], k, l)), (+1, (g, M[h, k], l)),
                            (-1, (g, h, M[k, l])), (+1, (g, h, k))]:
        np.add.at(rows, (r, w[0] * a + w[1] * b + w[2] * c), sign)
    rows = rows[np.any(rows != 0, axis=1)]
    return np.unique(rows, axis=0)


def search_dw3(G: FiniteGroup, N: int) -> list:
    """Generators of the 3-cocycles G^3 -> Z/N (exponent form)."""
    gens, _ = smith_kernel(dw3_relation_matrix(G), N)
    return [DW3Cocycle(G, N, v.reshape((G.order,) * 3)) for v in gens]
