"""Two-dimensional lattice field theory from an associative algebra.

Data: structure constants C[x][y][z] (phi_x phi_y = sum_z C[x][y][z] phi_z).
The bilinear form g_xy = sum_{u,v} C^v_{ux} C^u_{vy}, its inverse g^xy and
the lowered constants C_xyz = sum_u g_zu C^u_xy give a weight C_xyz per
triangle and g^uv per edge; the partition function sums over labels of all
edge-triangle incidences.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm

from .simplicial import Triangulation, TriangulationError, orient


class AlgebraError(ValueError):
    pass


def _inverse(mat):
    """Inverse of a square Fraction matrix, or None if singular."""
    n = len(mat)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


@dataclass(frozen=True)
class AlgebraData:
    n: int
    C: tuple  # C[x][y][z] = C_{xy}^z
    g: tuple = field(init=False)
    g_inv: tuple | None = field(init=False)
    lowered: tuple | None = field(init=False)

    def __post_init__(self):
        n = self.n
        C = tuple(tuple(tuple(Fraction(self.C[x][y][z]) for z in range(n))
                        for y in range(n)) for x in range(n))
        object.__setattr__(self, "C", C)
        g = bilinear_form(C)
        object.__setattr__(self, "g", tuple(tuple(r) for r in g))
        inv = _inverse(g)
        object.__setattr__(self, "g_inv", None if inv is None else tuple(tuple(r) for r in inv))
        low = tuple(tuple(tuple(sum(g[u][z] * C[x][y][u] for u in range(n)) for z in range(n))
                          for y in range(n)) for x in range(n))
        object.__setattr__(self, "lowered", low)

    @property
    def semisimple(self) -> bool:
        return self.g_inv is not None

    def associativity_violations(self) -> list:
        n, C = self.n, self.C
        bad = []
        for a, b, c, d in product(range(n), repeat=4):
            lhs = sum(C[a][b][j] * C[j][c][d] for j in range(n))
            rhs = sum(C[a][i][d] * C[b][c][i] for i in range(n))
            if lhs != rhs:
                bad.append((a, b, c, d))
        return bad

    def is_cyclic(self) -> bool:
        L, n = self.lowered, self.n
        return all(L[x][y][z] == L[y][z][x] for x, y, z in product(range(n), repeat=3))


def bilinear_form(C) -> list:
    n = len(C)
    return [[sum(Fraction(C[u][x][v]) * Fraction(C[v][y][u]) for u in range(n) for v in range(n))
             for y in range(n)] for x in range(n)]


def group_algebra(G) -> AlgebraData:
    n = G.order
    C = [[[int(G.mul(x, y) == z) for z in range(n)] for y in range(n)] for x in range(n)]
    return AlgebraData(n, C)


def parse_algebra(text: str) -> AlgebraData:
    n = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        w = line.split()
        try:
            if w[0] == "dim" and len(w) == 2:
                n = int(w[1])
            elif w[0] == "C" and len(w) == 5:
                entries.append((int(w[1]), int(w[2]), int(w[3]), Fraction(w[4])))
            else:
                raise ValueError(f"cannot parse {raw!r}")
        except ValueError as exc:
            raise AlgebraError(f"line {lineno}: {exc}") from None
    if n is None or n < 1:
        raise AlgebraError("missing 'dim n' line")
    C = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for x, y, z, v in entries:
        if not all(0 <= i < n for i in (x, y, z)):
            raise AlgebraError(f"index out of range in C {x} {y} {z}")
        C[x][y][z] = v
    return AlgebraData(n, C)


def serialize_algebra(A: AlgebraData) -> str:
    lines = [f"dim {A.n}"]
    for x, y, z in product(range(A.n), repeat=3):
        if A.C[x][y][z]:
            lines.append(f"C {x} {y} {z} {A.C[x][y][z]}")
    return "\n".join(lines) + "\n"


def face_cycles(T: Triangulation) -> list:
    """For each triangle, its three edges in boundary order (counterclockwise
    for the orientation), starting at the O-least vertex."""
    out = []
    for f in T.facets:
        a, b, c = T.sorted_by_order(f)
        if T.orientation_in_order(f) < 0:
            b, c = c, b
        out.append([tuple(sorted(e)) for e in ((a, b), (b, c), (c, a))])
    return out


def _contract(items, slot_src, keep_idx, added_pos, gi, Li, full) -> dict:
    out = {}
    for key, val in items:
        choices = [gi[key[j]] if j >= 0 else full for j in slot_src]
        for (x, wx), (y, wy), (z, wz) in product(*choices):
            w = Li[x][y][z]
            if not w:
                continue
            lab = (x, y, z)
            nk = tuple(key[i] for i in keep_idx) + tuple(lab[i] for i in added_pos)
            out[nk] = out.get(nk, 0) + w * wx * wy * wz * val
    return out


def partition_2d(T: Triangulation, A: AlgebraData, threads: int = 1) -> Fraction:
    """Sum over incidence labels of prod C_xyz * prod g^uv, computed by
    contracting the triangle tensors one at a time along shared edges.

    ``threads`` > 1 splits every contraction step over the tensor entries;
    partial tensors are merged by exact integer addition."""
    if T.dim != 2:
        raise TriangulationError("partition_2d needs a surface")
    if not A.semisimple:
        raise AlgebraError("bilinear form is singular")
    if not T.oriented:
        T = orient(T)
    n, L, ginv = A.n, A.lowered, A.g_inv
    faces = face_cycles(T)
    # order faces so each one touches the already contracted region
    edges_of = [set(f) for f in faces]
    remaining = list(range(len(faces)))
    order = [remaining.pop(0)]
    while remaining:
        seen = set().union(*(edges_of[i] for i in order))
        i = max(remaining, key=lambda j: (len(edges_of[j] & seen), -j))
        remaining.remove(i)
        order.append(i)
    # Exact integer arithmetic: scale C_xyz and g^uv to integers and divide once at the end.
    dl = lcm(*(c.denominator for plane in L for row in plane for c in row))
    dg = lcm(*(c.denominator for row in ginv for c in row))
    Li = [[[int(c * dl) for c in row] for row in plane] for plane in L]
    gi = [[(v, int(c * dg)) for v, c in enumerate(row) if c] for row in ginv]
    full = [(v, 1) for v in range(n)]
    # tensor: dict from labels of open edges (tuple, in `open_edges` order) to value.
    # An open edge carries the label of its first incidence; the edge weight
    # g^uv is applied when the second incidence is contracted.
    open_edges = []
    tensor = {(): 1}
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for fi in order:
            cyc = faces[fi]
            closing = [e for e in cyc if e in open_edges]
            keep = [e for e in open_edges if e not in closing]
            args = ([open_edges.index(e) if e in closing else -1 for e in cyc],
                    [open_edges.index(e) for e in keep],
                    [i for i, e in enumerate(cyc) if e not in open_edges], gi, Li, full)
            items = list(tensor.items())
            if pool is None:
                new_tensor = _contract(items, *args)
            else:
                new_tensor = {}
                for part in pool.map(lambda ch: _contract(ch, *args),
                                     [items[i::threads] for i in range(threads)]):
                    for k, v in part.items():
                        new_tensor[k] = new_tensor.get(k, 0) + v
            open_edges = keep + [cyc[i] for i in args[2]]
            tensor = {k: v for k, v in new_tensor.items() if v}
    finally:
        if pool is not None:
            pool.shutdown()
    if open_edges:
        raise TriangulationError("surface is not closed")
    n_edges = len(T.faces(1))
    return Fraction(tensor.get((), 0), dl ** len(faces) * dg ** n_edges)
