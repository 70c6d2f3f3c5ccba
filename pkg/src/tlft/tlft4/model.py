"""Precomputed incidence data for the four-dimensional state sum.

A state is stored compactly:

* ``g[i]``  group element on the i-th primal edge, oriented O-upwards;
  flatness g(v0 v2) = g(v1 v2) g(v0 v1) on every triangle.
* ``x[k]``  dual group element on the k-th dual edge (tetrahedron t),
  oriented from the smaller to the larger dual vertex and read in the frame
  of the O-least vertex v0 of t.

The full coloring of an incidence of an edge (u < w) in t is
(g(u w), g(v0 u) x g(v0 u)^-1), and a dual edge of t seen from the frame of a
vertex a of t is g(v0 a) x g(v0 a)^-1.  Dual labels are flat around every
dual polygon, with paths composing right to left.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..dw3 import EdgeSystem
from ..simplicial import Triangulation, perm_parity
from .dual import DualSkeleton, ThreeFaceTriangulation


def cyclic_sign(positions) -> int:
    """+1 if three distinct cycle positions appear in cyclic increasing order."""
    a, b, c = positions
    return +1 if (a < b < c) or (b < c < a) or (c < a < b) else -1


def tet_sign_crossing(T: Triangulation, tet, upper_facet) -> int:
    """Orientation of (tet in O order, dual edge pointing into ``upper_facet``)."""
    v = next(u for u in upper_facet if u not in tet)
    return T.ordered_sign(tuple(tet) + (v,))


def tet_sign_positive_facet(T: Triangulation, tet, facets) -> int:
    """The sign read from the 4-simplex S with (tet in O order, extra vertex v)
    positively oriented: parity of that sequence against the O-sorted S."""
    for s in facets:
        v = next(u for u in s if u not in tet)
        seq = tuple(tet) + (v,)
        if T.ordered_sign(seq) > 0:
            return perm_parity([T.rank[u] for u in seq])
    raise AssertionError("no positively oriented side")


@dataclass
class TetData:
    e01: int
    e12: int
    e23: int
    sign: int


@dataclass
class PolygonData:
    a: int               # O-least vertex of the face (frame)
    e_ab: int
    e_bc: int
    slots: list          # (dual edge, sign, frame edge or -1) around the cycle
    fan: list            # (pos x, pos y, pos z, sign) with x < y < z in dual order


@dataclass
class CellData:
    e_ab: int
    a: int
    vertices: list       # dual vertices, root first
    tree: list           # (child, parent, dual edge, sign, frame edge): label(parent->child)
    cone: list           # (x, y, z, sign) dual vertices with x < y < z


class StateSumModel:
    """Everything the weights need, for one complex, vertex order and
    3-face triangulation.  ``tet_sign`` selects the reading of the sign of
    tetrahedron weights ("crossing" or "positive-facet")."""

    def __init__(self, D: DualSkeleton, F: ThreeFaceTriangulation, tet_sign: str = "crossing"):
        T = D.T
        self.T, self.D, self.F = T, D, F
        self.edges = EdgeSystem(T)
        es = self.edges
        self.n_edges = len(es.edges)
        self.n_tets = len(D.tets)

        def frame_edge(v0, a):
            return -1 if v0 == a else es.edge(v0, a)

        self.tets = []
        for k, t in enumerate(D.tets):
            v0, v1, v2, v3 = t
            upper = D.vertices[D.edges[k][1]]
            if tet_sign == "crossing":
                s = tet_sign_crossing(T, t, upper)
            elif tet_sign == "positive-facet":
                s = tet_sign_positive_facet(T, t, T.star(t))
            else:
                raise ValueError(f"unknown tetrahedron sign rule {tet_sign!r}")
            self.tets.append(TetData(es.edge(v0, v1), es.edge(v1, v2), es.edge(v2, v3), s))
        self.tet_v0 = [t[0] for t in D.tets]

        self.polygons = []
        for pi, p in enumerate(D.polygons):
            a, b, c = p.face
            slots = [(k, sg, frame_edge(self.tet_v0[k], a)) for k, sg in p.sides]
            pos = {v: i for i, v in enumerate(p.cycle)}
            fan = []
            for tri in F.fans[pi]:
                x, y, z = sorted(tri)
                fan.append((pos[x], pos[y], pos[z], cyclic_sign((pos[x], pos[y], pos[z]))))
            self.polygons.append(PolygonData(a, es.edge(a, b), es.edge(b, c), slots, fan))

        self.cells = []
        for ci, cell in enumerate(D.cells):
            a, b = cell.edge
            adj = {v: [] for v in cell.vertices}
            for k in cell.dual_edges:
                t, h = D.edges[k]
                adj[t].append((h, k, +1))
                adj[h].append((t, k, -1))
            root = cell.vertices[0]
            seen = {root}
            tree = []
            frontier = [root]
            while frontier:
                nxt = []
                for v in frontier:
                    for u, k, sg in adj[v]:
                        if u not in seen:
                            seen.add(u)
                            tree.append((u, v, k, sg, frame_edge(self.tet_v0[k], a)))
                            nxt.append(u)
                frontier = nxt
            cone = []
            for pi, tri in F.cone_triangles(D, ci):
                p = D.polygons[pi]
                w = next(v for v in p.face if v not in (a, b))
                pos = {v: i for i, v in enumerate(p.cycle)}
                x, y, z = sorted(tri)
                s_tri = cyclic_sign((pos[x], pos[y], pos[z]))
                s_face = perm_parity([T.rank[v] for v in (a, b, w)])
                # cone point first: its orientation is opposite to the boundary fan
                cone.append((x, y, z, -s_tri * s_face))
            self.cells.append(CellData(es.edge(a, b), a, list(cell.vertices), tree, cone))

    # constraint systems

    def primal_constraints(self):
        return self.edges.triangles

    def dual_constraints(self, g):
        """Polygon flatness for a fixed primal coloring ``g``; slots carry the
        frame change g(v0 a)."""
        out = []
        for p in self.polygons:
            out.append([(k, sg, None if fe < 0 else g[fe]) for k, sg, fe in p.slots])
        return out
