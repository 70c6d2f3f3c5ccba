"""Boltzmann weights of tetrahedra, 2-faces and edges.

Weights are roots of unity (tetrahedra, faces) or normalized sums of roots of
unity (edges), so they are tracked as exponents mod N:

* tetrahedron t = (v0 v1 v2 v3):  alpha(g23, g12, g01; x_t) ** sign
* 2-face (a b c):  product over the fan triangles x < y < z of its dual
  polygon of phi(g_bc, g_ab; m, l) ** sign, m = label(y->z), l = label(x->y)
* edge (a b):  |G|^-1 sum over the label u of the cone edges of the product
  over cone tetrahedra (c, x, y, z) of beta(g_ab; h, l, n) ** sign with
  h = label(y->z), l = label(x->y), n = label(c->x)

All dual labels are read in the frame of the least vertex of the 2-face or
edge.  Signs compare the orientation of (cell, dual cell) with the manifold.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..cocycles import CocycleSystem
from ..cyclotomic import CycScalar, root
from .model import StateSumModel
from .states import State


class WeightEvaluator:
    def __init__(self, model: StateSumModel, sys: CocycleSystem):
        self.model = model
        self.sys = sys
        G = sys.group
        self.G = G
        self.M = G.table
        self.I = G.inverse
        self.N = sys.N

    def _frame(self, g, x, k, fe):
        if fe < 0:
            return x[k]
        c = g[fe]
        return int(self.M[self.M[c, x[k]], self.I[c]])

    def tet_exponent(self, s: State, k: int) -> int:
        td = self.model.tets[k]
        g = s.g
        return td.sign * int(self.sys.alpha[g[td.e23], g[td.e12], g[td.e01], s.x[k]])

    def polygon_potential(self, s: State, pi: int) -> list:
        """H[i] = label from cycle position 0 to position i."""
        M, I = self.M, self.I
        p = self.model.polygons[pi]
        H = [self.G.identity]
        for k, sg, fe in p.slots[:-1]:
            y = self._frame(s.g, s.x, k, fe)
            if sg < 0:
                y = int(I[y])
            H.append(int(M[y, H[-1]]))
        return H

    def face_exponent(self, s: State, pi: int) -> int:
        M, I = self.M, self.I
        p = self.model.polygons[pi]
        H = self.polygon_potential(s, pi)
        gb, ka = s.g[p.e_bc], s.g[p.e_ab]
        phi = self.sys.phi
        total = 0
        for px, py, pz, sign in p.fan:
            m = int(M[H[pz], I[H[py]]])
            l = int(M[H[py], I[H[px]]])
            total += sign * int(phi[gb, ka, m, l])
        return total

    def cell_potential(self, s: State, ci: int) -> dict:
        M, I = self.M, self.I
        cell = self.model.cells[ci]
        P = {cell.vertices[0]: self.G.identity}
        for child, parent, k, sg, fe in cell.tree:
            y = self._frame(s.g, s.x, k, fe)
            if sg < 0:
                y = int(I[y])
            P[child] = int(M[y, P[parent]])
        return P

    def edge_exponents(self, s: State, ci: int) -> np.ndarray:
        """Exponent of the product of beta factors for each cone label u."""
        M, I = self.M, self.I
        cell = self.model.cells[ci]
        P = self.cell_potential(s, ci)
        beta = self.sys.beta[s.g[cell.e_ab]]
        out = np.zeros(self.G.order, dtype=np.int64)
        for x, y, z, sign in cell.cone:
            h = M[P[z], I[P[y]]]
            l = M[P[y], I[P[x]]]
            out += sign * beta[h, l][M[P[x]]]
        return out % self.N

    def edge_counts(self, s: State, ci: int) -> list:
        counts = [0] * self.N
        for e in self.edge_exponents(s, ci):
            counts[int(e)] += 1
        return counts

    def state_counts(self, s: State) -> list:
        """The state's total weight times |G|^(#edges), as a vector c with
        weight = sum_r c[r] z^r (z = exp(2 pi i / N))."""
        N = self.N
        e0 = sum(self.tet_exponent(s, k) for k in range(self.model.n_tets))
        e0 += sum(self.face_exponent(s, pi) for pi in range(len(self.model.polygons)))
        acc = [0] * N
        acc[e0 % N] = 1
        for ci in range(len(self.model.cells)):
            c = self.edge_counts(s, ci)
            nz = [(r, v) for r, v in enumerate(c) if v]
            if len(nz) == 1:
                r0, v0 = nz[0]
                acc = [acc[(i - r0) % N] * v0 for i in range(N)]
                continue
            new = [0] * N
            for i, a in enumerate(acc):
                if a:
                    for r, v in nz:
                        new[(i + r) % N] += a * v
            acc = new
        return acc


# single weights as field elements

def weight_tet(ev: WeightEvaluator, s: State, k: int) -> CycScalar:
    return root(ev.N, ev.tet_exponent(s, k))


def weight_face(ev: WeightEvaluator, s: State, pi: int) -> CycScalar:
    return root(ev.N, ev.face_exponent(s, pi))


def weight_edge(ev: WeightEvaluator, s: State, ci: int) -> CycScalar:
    counts = ev.edge_counts(s, ci)
    return CycScalar.from_exponent_counts(ev.N, counts).scale(Fraction(1, ev.G.order))
