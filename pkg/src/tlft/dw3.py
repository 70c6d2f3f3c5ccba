"""Dijkgraaf-Witten invariant of closed oriented triangulated 3-manifolds.

A flat coloring assigns x(u->w) in G to every edge oriented from the O-smaller
vertex u to the larger w, with x(v0->v2) = x(v1->v2) x(v0->v1) on every
triangle v0 < v1 < v2.  A tetrahedron v0 < v1 < v2 < v3 contributes
alpha3[x(23) | x(12) | x(01)] raised to its orientation sign in O order.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .cocycles import CocycleError, DW3Cocycle, check_dw3
from .cyclotomic import CycScalar
from .flat import Budget, solve_flat, spanning_tree_edges
from .groups import FiniteGroup
from .simplicial import Triangulation, TriangulationError, is_connected, orient


class EdgeSystem:
    """Edges of a complex oriented by O, with triangle constraints."""

    def __init__(self, T: Triangulation):
        self.T = T
        self.edges = [T.sorted_by_order(e) for e in T.faces(1)]
        self.index = {frozenset(e): i for i, e in enumerate(self.edges)}
        self.triangles = []
        for f in T.faces(2):
            a, b, c = T.sorted_by_order(f)
            # path a->b->c then back c->a
            self.triangles.append([(self.edge(a, b), +1, None), (self.edge(b, c), +1, None),
                                   (self.edge(a, c), -1, None)])
        verts = {v: i for i, v in enumerate(T.order)}
        pairs = [(verts[u], verts[w]) for u, w in self.edges]
        root = 0
        self.tree = spanning_tree_edges(len(verts), pairs, root)

    def edge(self, u, w) -> int:
        return self.index[frozenset((u, w))]

    def colorings(self, G: FiniteGroup, gauge_fixed: bool = False, budget=None):
        fixed = {i: G.identity for i in self.tree} if gauge_fixed else None
        yield from solve_flat(G, len(self.edges), self.triangles, fixed, budget=budget)


def enumerate_flat_colorings(T: Triangulation, G: FiniteGroup, gauge_fixed: bool = False):
    """Yield dicts (u, w) -> group element for O-ascending edges (u, w).

    With ``gauge_fixed`` only colorings that are trivial on a spanning tree of
    the 1-skeleton are produced; every coloring is the gauge transform of
    exactly one of those by a vertex function that is trivial at the root."""
    es = EdgeSystem(T)
    for vals in es.colorings(G, gauge_fixed):
        yield {e: vals[i] for i, e in enumerate(es.edges)}


def count_flat_colorings(T: Triangulation, G: FiniteGroup) -> int:
    es = EdgeSystem(T)
    fixed = sum(1 for _ in es.colorings(G, True))
    return fixed * G.order ** (T.vertex_count - 1)


def dw_weight_exponent(es: EdgeSystem, c: DW3Cocycle, vals, signs) -> int:
    a = c.alpha3
    total = 0
    for (i01, i12, i23), s in signs:
        total += s * int(a[vals[i23], vals[i12], vals[i01]])
    return total % c.N


def tetra_data(es: EdgeSystem):
    T = es.T
    out = []
    for f in T.facets:
        v0, v1, v2, v3 = T.sorted_by_order(f)
        eps = T.orientation_in_order(f)
        out.append(((es.edge(v0, v1), es.edge(v1, v2), es.edge(v2, v3)), eps))
    return out


def _exponent_counts(es, c, data, colorings) -> list:
    counts = [0] * c.N
    for vals in colorings:
        counts[dw_weight_exponent(es, c, vals, data)] += 1
    return counts


def partition_dw3(T: Triangulation, G: FiniteGroup, c: DW3Cocycle,
                  gauge_fixed: bool = True, budget: int | None = None,
                  threads: int = 1) -> CycScalar:
    """Z = |G|^-V sum over flat colorings of prod alpha3^eps.

    With ``threads`` > 1 the weights are evaluated on round-robin chunks of
    the colorings; the integer counts are summed, so the result does not
    depend on the split."""
    if T.dim != 3:
        raise TriangulationError("partition_dw3 needs a 3-dimensional complex")
    if c.group.order != G.order:
        raise CocycleError("cocycle is over a different group")
    if check_dw3(c):
        raise CocycleError("not a 3-cocycle")
    if not is_connected(T):
        raise TriangulationError("complex is not connected")
    if not T.oriented:
        T = orient(T)
    es = EdgeSystem(T)
    data = tetra_data(es)
    colorings = es.colorings(G, gauge_fixed, Budget(budget))
    if threads > 1:
        colorings = list(colorings)
        chunks = [colorings[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ch: _exponent_counts(es, c, data, ch), chunks))
        counts = [sum(col) for col in zip(*parts)]
    else:
        counts = _exponent_counts(es, c, data, colorings)
    total = CycScalar.from_exponent_counts(c.N, counts)
    gauge = G.order ** (T.vertex_count - 1) if gauge_fixed else 1
    return total.scale(Fraction(gauge, G.order ** T.vertex_count))
