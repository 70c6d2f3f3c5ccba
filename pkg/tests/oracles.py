"""Independent reference computations used by the tests.

None of these reuse the enumeration, orientation or elimination code of the
package; they are slow, direct, and only meant for small inputs.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations, product

import numpy as np
from sympy import GF
from sympy.polys.matrices import DomainMatrix


def parity(seq) -> int:
    seq = list(seq)
    inv = sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def oriented_sequences(facets) -> dict:
    """Orient a closed pseudo-manifold by breadth-first propagation.

    Returns facet -> vertex sequence such that neighbouring facets induce
    opposite orientations on their shared ridge.  Raises if impossible."""
    facets = [tuple(sorted(f)) for f in facets]
    by_ridge = {}
    for f in facets:
        for r in combinations(f, len(f) - 1):
            by_ridge.setdefault(r, []).append(f)
    seq = {facets[0]: facets[0]}
    todo = deque([facets[0]])

    def induced(s, r):
        # boundary term of the ridge r in the oriented simplex s
        missing = next(v for v in s if v not in r)
        i = s.index(missing)
        rest = s[:i] + s[i + 1:]
        return (-1) ** i * parity([sorted(r).index(v) for v in rest])

    while todo:
        f = todo.popleft()
        for r in combinations(f, len(f) - 1):
            for h in by_ridge[r]:
                if h == f:
                    continue
                want = -induced(seq[f], r)
                cand = h if induced(h, r) == want else (h[1], h[0]) + h[2:]
                if h in seq:
                    if induced(seq[h], r) != want:
                        raise ValueError("not orientable")
                    continue
                seq[h] = cand
                todo.append(h)
    return seq


def sign_in_order(seq, order) -> int:
    """Sign of the simplex listed in the vertex order against an oriented sequence."""
    rank = {v: i for i, v in enumerate(order)}
    ascending = sorted(seq, key=rank.__getitem__)
    return parity([seq.index(v) for v in ascending])


def rank_mod_p(rows, p: int) -> int:
    rows = [[int(x) % p for x in r] for r in rows]
    if not rows:
        return 0
    dm = DomainMatrix([[GF(p)(x) for x in r] for r in rows], (len(rows), len(rows[0])), GF(p))
    return dm.rank()


def coboundary_rank(faces_1, faces_2, p: int) -> int:
    """Rank mod p of the coboundary C^1 -> C^2 (edges oriented by label)."""
    idx = {e: i for i, e in enumerate(faces_1)}
    rows = []
    for a, b, c in faces_2:
        r = [0] * len(faces_1)
        r[idx[(b, c)]] += 1
        r[idx[(a, c)]] -= 1
        r[idx[(a, b)]] += 1
        rows.append(r)
    return rank_mod_p(rows, p)


def flat_count_cyclic(T, p: int) -> int:
    """Flat Z/p colorings = p^(edges - rank of the coboundary)."""
    return p ** (len(T.faces(1)) - coboundary_rank(T.faces(1), T.faces(2), p))


def group_algebra_psi(facets, G) -> Fraction:
    """Brute-force 2D state sum for the group algebra of G: every edge gets a
    group element, a triangle weighs |G| if the product around it is e and
    every edge weighs 1/|G|."""
    facets = [tuple(sorted(f)) for f in facets]
    seq = oriented_sequences(facets)
    edges = sorted({e for f in facets for e in combinations(f, 2)})
    eidx = {e: i for i, e in enumerate(edges)}
    n = G.order
    M, I = G.table, G.inverse
    walks = []
    for f in facets:
        a, b, c = seq[f]
        walk = []
        for u, w in ((a, b), (b, c), (c, a)):
            walk.append((eidx[tuple(sorted((u, w)))], u < w))
        walks.append(walk)
    count = 0
    if n == 2:
        bits = np.arange(2 ** len(edges), dtype=np.int64)
        ok = np.ones_like(bits, dtype=bool)
        for walk in walks:
            s = np.zeros_like(bits)
            for i, _ in walk:
                s ^= (bits >> i) & 1
            ok &= s == 0
        count = int(ok.sum())
    else:
        for labels in product(range(n), repeat=len(edges)):
            good = True
            for walk in walks:
                x = G.identity
                for i, fwd in walk:
                    y = labels[i] if fwd else int(I[labels[i]])
                    x = int(M[x, y])
                if x != G.identity:
                    good = False
                    break
            count += good
    return Fraction(count * n ** len(facets), n ** len(edges))


def dw_brute_force(T, G, alpha3, N: int) -> list:
    """Exponent counts of the DW sum over all |G|^E colorings (no gauge
    fixing), with tetrahedron signs from an independent orientation."""
    seq = oriented_sequences(T.facets)
    order = T.order
    rank = {v: i for i, v in enumerate(order)}
    edges = sorted({tuple(sorted(e, key=rank.__getitem__)) for f in T.facets
                    for e in combinations(f, 2)})
    eidx = {e: i for i, e in enumerate(edges)}
    tris = sorted({tuple(sorted(t, key=rank.__getitem__)) for f in T.facets
                   for t in combinations(f, 3)})
    M = G.table
    counts = [0] * N
    tets = []
    for f in T.facets:
        v = sorted(f, key=rank.__getitem__)
        tets.append((eidx[(v[0], v[1])], eidx[(v[1], v[2])], eidx[(v[2], v[3])],
                     sign_in_order(seq[f], order)))
    for x in product(range(G.order), repeat=len(edges)):
        if any(x[eidx[(a, c)]] != M[x[eidx[(b, c)]], x[eidx[(a, b)]]] for a, b, c in tris):
            continue
        e = sum(s * int(alpha3[x[i23], x[i12], x[i01]]) for i01, i12, i23, s in tets)
        counts[e % N] += 1
    return counts


def z2_state_count_4d(T) -> int:
    """Admissible states for G = Z/2 by unconstrained enumeration with rule
    rejection: primal edge bits flat on every triangle, dual (tetrahedron)
    bits summing to zero around every 2-face."""
    edges = T.faces(1)
    eidx = {e: i for i, e in enumerate(edges)}
    tets = T.faces(3)
    tidx = {t: i for i, t in enumerate(tets)}

    def count(n_vars, rules):
        bits = np.arange(2 ** n_vars, dtype=np.int64)
        ok = np.ones_like(bits, dtype=bool)
        for rule in rules:
            s = np.zeros_like(bits)
            for i in rule:
                s ^= (bits >> i) & 1
            ok &= s == 0
        return int(ok.sum())

    primal = [[eidx[e] for e in combinations(t, 2)] for t in T.faces(2)]
    dual = [[tidx[t] for t in tets if set(f) <= set(t)] for f in T.faces(2)]
    return count(len(edges), primal) * count(len(tets), dual)


def literal_cocycle_violations(sys, symmetries: bool = True) -> int:
    """Count violated instances of the four conditions (and the symmetries)
    by plain loops over group elements, written out term by term."""
    G, N = sys.group, sys.N
    n = G.order
    A, B, P = sys.alpha, sys.beta, sys.phi

    def mul(*xs):
        out = G.identity
        for x in xs:
            out = int(G.table[out, x])
        return out

    def inv(x):
        return int(G.inverse[x])

    def conj(a, b):
        return mul(a, b, inv(a))

    bad = 0
    for g, k, m, p, q in product(range(n), repeat=5):
        lhs = A[k, m, p, q] + A[g, mul(k, m), p, q] + A[g, k, m, conj(p, q)]
        rhs = A[mul(g, k), m, p, q] + A[g, k, mul(m, p), q]
        bad += (lhs - rhs) % N != 0
        lhs = A[g, k, m, p] + A[g, k, m, q] + P[k, m, p, q] + P[g, mul(k, m), p, q]
        rhs = P[g, k, conj(m, p), conj(m, q)] + P[mul(g, k), m, p, q] + A[g, k, m, mul(p, q)]
        bad += (lhs - rhs) % N != 0
    for g, i, j, k, l in product(range(n), repeat=5):
        lhs = B[g, j, k, l] + B[g, i, mul(j, k), l] + B[g, i, j, k]
        rhs = B[g, mul(i, j), k, l] + B[g, i, j, mul(k, l)]
        bad += (lhs - rhs) % N != 0
    for g, k, p, r, s in product(range(n), repeat=5):
        lhs = P[g, k, p, r] + P[g, k, mul(p, r), s] + B[mul(g, k), p, r, s]
        rhs = (B[g, conj(k, p), conj(k, r), conj(k, s)] + B[k, p, r, s] + P[g, k, r, s]
               + P[g, k, p, mul(r, s)])
        bad += (lhs - rhs) % N != 0
    if not symmetries:
        return int(bad)
    for a, b, c, d in product(range(n), repeat=4):
        # each pair of forms multiplies to 1: exponents sum to zero
        pairs = [
            (A[a, b, c, d], A[inv(a), mul(a, b), c, d]),
            (A[a, b, c, d], A[mul(a, b), inv(b), mul(b, c), d]),
            (A[a, b, c, d], A[a, mul(b, c), inv(c), conj(c, d)]),
            (P[a, b, c, d], P[inv(a), mul(a, b), c, d]),
            (P[a, b, c, d], P[mul(a, b), inv(b), conj(b, c), conj(b, d)]),
            (P[a, b, c, d], P[a, b, mul(c, d), inv(d)]),
            (P[a, b, c, d], P[a, b, inv(c), mul(c, d)]),
            (B[a, b, c, d], B[a, inv(b), mul(b, c), d]),
            (B[a, b, c, d], B[a, mul(b, c), inv(c), mul(c, d)]),
            (B[a, b, c, d], B[a, b, mul(c, d), inv(d)]),
        ]
        bad += sum((x + y) % N != 0 for x, y in pairs)
    return int(bad)
