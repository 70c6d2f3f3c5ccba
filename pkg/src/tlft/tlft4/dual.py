"""Dual cell structure of a closed oriented triangulated 4-manifold.

Dual vertices are the 4-simplices, numbered in lexicographic order of their
O-sorted vertex ranks; that numbering is the order on dual vertices.  Each
tetrahedron gives a dual edge from the smaller to the larger of its two
4-simplices.  Each 2-face f gives a dual polygon whose vertex cycle follows
the oriented link of f, and each edge e gives a dual 3-cell bounded by the
polygons of the 2-faces containing e.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..simplicial import Triangulation, TriangulationError, face_link_cycle, orient


@dataclass(frozen=True)
class DualPolygon:
    face: tuple          # O-sorted 2-face
    cycle: tuple         # dual vertex indices in boundary order
    link: tuple          # link vertices w_0, w_1, ... (cycle[i] = face + {w_i, w_i+1})
    sides: tuple         # (dual edge index, +1 if traversed tail->head) from cycle[i] to cycle[i+1]


@dataclass(frozen=True)
class DualCell:
    edge: tuple          # O-sorted primal edge (a, b)
    polygons: tuple      # indices of the polygons of 2-faces containing the edge
    vertices: tuple      # dual vertices of the cell
    dual_edges: tuple    # dual edges (tetrahedra containing the edge)


@dataclass(frozen=True)
class DualSkeleton:
    T: Triangulation
    vertices: tuple      # facets (label-sorted) in dual order
    edges: tuple         # (tail, head) per tetrahedron, aligned with tets
    tets: tuple          # O-sorted tetrahedra
    polygons: tuple
    cells: tuple
    vertex_index: dict
    tet_index: dict      # label-sorted tetrahedron -> dual edge index
    face_index: dict     # label-sorted 2-face -> polygon index
    edge_index: dict     # label-sorted edge -> cell index

    def stats(self) -> dict:
        return {
            "dual_vertices": len(self.vertices),
            "dual_edges": len(self.edges),
            "dual_polygons": len(self.polygons),
            "dual_cells": len(self.cells),
            "polygon_sizes": sorted({len(p.cycle) for p in self.polygons}),
        }


def build_dual(T: Triangulation) -> DualSkeleton:
    if T.dim != 4:
        raise TriangulationError("dual skeleton is built for 4-dimensional complexes")
    if not T.oriented:
        T = orient(T)
    rank = T.rank
    verts = sorted(T.facets, key=lambda f: [rank[v] for v in T.sorted_by_order(f)])
    vindex = {f: i for i, f in enumerate(verts)}
    tets, edges, tindex = [], [], {}
    for t in T.faces(3):
        st = T.star(t)
        if len(st) != 2:
            raise TriangulationError(f"tetrahedron {t} is not in exactly two 4-simplices")
        a, b = sorted(vindex[s] for s in st)
        tindex[t] = len(tets)
        tets.append(T.sorted_by_order(t))
        edges.append((a, b))
    polys, findex = [], {}
    for f in T.faces(2):
        link = face_link_cycle(T, f)
        n = len(link)
        if n < 3:
            raise TriangulationError(f"2-face {f} has a degenerate link of length {n}")
        cyc = tuple(vindex[tuple(sorted(f + (link[i], link[(i + 1) % n])))] for i in range(n))
        sides = []
        for i in range(n):
            t = tuple(sorted(f + (link[(i + 1) % n],)))
            k = tindex[t]
            sides.append((k, +1 if edges[k] == (cyc[i], cyc[(i + 1) % n]) else -1))
            assert set(edges[k]) == {cyc[i], cyc[(i + 1) % n]}
        findex[f] = len(polys)
        polys.append(DualPolygon(T.sorted_by_order(f), cyc, tuple(link), tuple(sides)))
    cells, eindex = [], {}
    for e in T.faces(1):
        ps = tuple(findex[f] for f in T.faces(2) if set(e) <= set(f))
        vs = tuple(sorted({vindex[s] for s in T.star(e)}))
        des = tuple(sorted(tindex[t] for t in T.faces(3) if set(e) <= set(t)))
        eindex[e] = len(cells)
        cells.append(DualCell(T.sorted_by_order(e), ps, vs, des))
    return DualSkeleton(T, tuple(verts), tuple(edges), tuple(tets), tuple(polys), tuple(cells),
                        vindex, tindex, findex, eindex)


@dataclass(frozen=True)
class ThreeFaceTriangulation:
    """Fan triangulation of every dual polygon (from a chosen apex) and, for
    every dual 3-cell, the cone over its triangulated boundary from one
    interior point; the cone point precedes all dual vertices in the order."""
    seed: int
    fans: tuple          # per polygon: tuple of triangles, each a triple of dual vertices
    apexes: tuple        # per polygon: the fan apex
    interior: tuple      # per cell: number of interior vertices (always 1 here)

    def cone_triangles(self, D: DualSkeleton, cell_index: int) -> list:
        """(polygon index, triangle) for the boundary triangles of a cell."""
        out = []
        for p in D.cells[cell_index].polygons:
            out += [(p, tri) for tri in self.fans[p]]
        return out


def triangulate_dual(D: DualSkeleton, seed: int = 0) -> ThreeFaceTriangulation:
    """Seed 0 fans each polygon from its least dual vertex; other seeds pick
    the apex pseudo-randomly (reproducibly) per polygon."""
    fans, apexes = [], []
    for p in D.polygons:
        cyc = list(p.cycle)
        n = len(cyc)
        if seed == 0:
            start = cyc.index(min(cyc))
        else:
            start = random.Random(f"{seed}:{p.face}").randrange(n)
        rot = cyc[start:] + cyc[:start]
        apexes.append(rot[0])
        fans.append(tuple((rot[0], rot[i], rot[i + 1]) for i in range(1, n - 1)))
    return ThreeFaceTriangulation(seed, tuple(fans), tuple(apexes), tuple(1 for _ in D.cells))
