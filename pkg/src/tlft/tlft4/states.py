"""Admissible states: flat primal colorings plus flat dual colorings."""
from __future__ import annotations

from dataclasses import dataclass

from ..flat import Budget, solve_flat, spanning_tree_edges
from ..groups import DoubleLabel, FiniteGroup, compose_labels, reverse_dual
from .model import StateSumModel

GAUGES = {"none": (), "primal": ("primal",), "dual": ("dual",), "both": ("primal", "dual")}


@dataclass(frozen=True)
class State:
    g: tuple   # per primal edge (O-upwards)
    x: tuple   # per dual edge (smaller -> larger dual vertex), frame of the tetrahedron's least vertex


def primal_tree(model: StateSumModel) -> list:
    es = model.edges
    verts = {v: i for i, v in enumerate(model.T.order)}
    return spanning_tree_edges(len(verts), [(verts[u], verts[w]) for u, w in es.edges])


def dual_tree(model: StateSumModel) -> list:
    return spanning_tree_edges(len(model.D.vertices), list(model.D.edges))


def primal_colorings(model: StateSumModel, G: FiniteGroup, fix_gauge: bool, budget: Budget):
    fixed = {i: G.identity for i in primal_tree(model)} if fix_gauge else None
    yield from solve_flat(G, model.n_edges, model.primal_constraints(), fixed, budget=budget)


def dual_colorings(model: StateSumModel, G: FiniteGroup, g, fix_gauge: bool, budget: Budget,
                   tree=None):
    fixed = None
    if fix_gauge:
        tree = dual_tree(model) if tree is None else tree
        fixed = {k: G.identity for k in tree}
    yield from solve_flat(G, model.n_tets, model.dual_constraints(g), fixed, budget=budget)


def enumerate_states(model: StateSumModel, G: FiniteGroup, gauge: str = "none",
                     budget: Budget | None = None):
    """Yield every admissible State (or one representative per gauge orbit
    of the selected kind: ``primal``, ``dual`` or ``both``)."""
    fix = GAUGES[gauge]
    budget = budget or Budget()
    tree = dual_tree(model)
    for g in primal_colorings(model, G, "primal" in fix, budget):
        for x in dual_colorings(model, G, g, "dual" in fix, budget, tree):
            yield State(tuple(g), tuple(x))


def gauge_multiplicity(model: StateSumModel, G: FiniteGroup, gauge: str) -> int:
    fix = GAUGES[gauge]
    m = 1
    if "primal" in fix:
        m *= G.order ** (model.T.vertex_count - 1)
    if "dual" in fix:
        m *= G.order ** (len(model.D.vertices) - 1)
    return m


# explicit colorings of incidences, for validation

def primal_path(model: StateSumModel, G: FiniteGroup, g, u, w) -> int:
    """Group element carried from u to w along the edge (identity if u == w)."""
    if u == w:
        return G.identity
    k = model.edges.edge(u, w)
    lo, hi = model.edges.edges[k]
    return g[k] if (lo, hi) == (u, w) else G.inv(g[k])


def incidence_labels(model: StateSumModel, G: FiniteGroup, s: State) -> dict:
    """(O-sorted edge, O-sorted tetrahedron) -> DoubleLabel."""
    out = {}
    for k, t in enumerate(model.D.tets):
        v0 = t[0]
        for i in range(4):
            for j in range(i + 1, 4):
                u, w = t[i], t[j]
                c = primal_path(model, G, s.g, v0, u)
                out[((u, w), t)] = DoubleLabel(s.g[model.edges.edge(u, w)], G.conj(c, s.x[k]))
    return out


def dual_labels(model: StateSumModel, G: FiniteGroup, s: State) -> dict:
    """(primal edge, dual edge k) -> DoubleLabel on the dual edge oriented
    smaller -> larger, read in the dual cell of that primal edge.  Equals the
    incidence label of (edge, tetrahedron k) by duality."""
    out = {}
    for cell in model.D.cells:
        a, b = cell.edge
        for k in cell.dual_edges:
            c = primal_path(model, G, s.g, model.tet_v0[k], a)
            out[(cell.edge, k)] = DoubleLabel(s.g[model.edges.edge(a, b)], G.conj(c, s.x[k]))
    return out


def check_state(model: StateSumModel, G: FiniteGroup, s: State) -> list:
    """Violated local rules of a state (empty if admissible)."""
    bad = []
    inc = incidence_labels(model, G, s)
    for t in model.D.tets:
        for i, j, l in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
            u, v, w = t[i], t[j], t[l]
            try:
                c = compose_labels(G, inc[((u, v), t)], inc[((v, w), t)])
            except ValueError:
                bad.append(("triangle-rule", (u, v, w), t))
                continue
            if c != inc[((u, w), t)]:
                bad.append(("triangle-rule", (u, v, w), t))
    dual = dual_labels(model, G, s)
    for (e, k), lab in dual.items():
        if lab != inc[(e, model.D.tets[k])]:
            bad.append(("duality", e, k))
    # dual rule: around every polygon of every dual cell the dual parts compose to e
    for cell in model.D.cells:
        for pi in cell.polygons:
            p = model.D.polygons[pi]
            hol = G.identity
            for k, sg in p.sides:
                lab = dual[(cell.edge, k)]
                if lab.g != dual[(cell.edge, p.sides[0][0])].g:
                    bad.append(("dual-first-factor", cell.edge, k))
                step = lab if sg > 0 else reverse_dual(G, lab)
                hol = G.mul(step.h, hol)
            if hol != G.identity:
                bad.append(("dual-holonomy", cell.edge, p.face))
    return bad
