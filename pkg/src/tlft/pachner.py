"""Bistellar (Pachner) moves on closed triangulations of dimension 2-4.

A move of type (i, j), i + j = dim + 2, removes the i facets of the star of a
simplex ``sigma`` (with dim + 2 - i vertices) whose link is the boundary
of a simplex ``apex``, and inserts the j facets of the complementary ball
``boundary(sigma) * apex``.  For i = 1 the apex is a fresh vertex.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .simplicial import Triangulation, TriangulationError


@dataclass(frozen=True)
class MoveSite:
    i: int
    j: int
    sigma: tuple
    apex: tuple
    star: tuple

    def format(self) -> str:
        return (f"TYPE {self.i} {self.j} ; sigma {' '.join(map(str, self.sigma))} ; "
                f"apex {' '.join(map(str, self.apex))}")


def move_types(dim: int) -> list:
    return [(i, dim + 2 - i) for i in range(1, dim + 2)]


def find_moves(T: Triangulation, kind=None) -> list:
    """All legal sites, of one type ``(i, j)`` or of every type."""
    d = T.dim
    if kind is None:
        out = []
        for t in move_types(d):
            out += find_moves(T, t)
        return out
    i, j = kind
    if i + j != d + 2 or i < 1 or j < 1:
        raise ValueError(f"no move of type {kind} in dimension {d}")
    k = d + 1 - i  # dimension of sigma
    fresh = max(T.order) + 1
    out = []
    for s in T.faces(k):
        st = T.star(s)
        if len(st) != i:
            continue
        if k == d:
            out.append(MoveSite(i, j, s, (fresh,), tuple(st)))
            continue
        apex = tuple(sorted({v for f in st for v in f} - set(s)))
        if len(apex) != i:
            continue
        if T.has_simplex(apex):
            continue
        out.append(MoveSite(i, j, s, apex, tuple(st)))
    return out


def apply_move(T: Triangulation, site: MoveSite) -> Triangulation:
    star = set(site.star)
    if any(not T.has_simplex(f) or len(f) != T.dim + 1 for f in star):
        raise TriangulationError(f"stale move site {site.format()}")
    if sorted(T.star(site.sigma)) != sorted(star):
        raise TriangulationError(f"stale move site {site.format()}")
    new_vertex = len(site.sigma) == T.dim + 1
    if new_vertex:
        if T.has_simplex(site.apex):
            raise TriangulationError("fresh vertex already present")
    elif T.has_simplex(site.apex):
        raise TriangulationError(f"move would duplicate simplex {site.apex}")
    kept = [f for f in T.facets if f not in star]
    added = [tuple(sorted(c + site.apex)) for c in combinations(site.sigma, len(site.sigma) - 1)]
    if len(site.sigma) == 1:
        added = [site.apex]
    removed_vertex = site.sigma[0] if len(site.sigma) == 1 else None
    order = [v for v in T.order if v != removed_vertex]
    if new_vertex:
        order.append(site.apex[0])
    out = Triangulation.from_facets(T.dim, kept + added, order)
    if T.oriented:
        out = _carry_orientation(T, out)
    return out


def _carry_orientation(old: Triangulation, new: Triangulation) -> Triangulation:
    """Orient ``new`` compatibly with ``old`` on the facets they share."""
    from .simplicial import orient
    out = orient(new)
    for f, s in zip(old.facets, old.signs):
        if f in out.facet_index:
            if out.signs[out.facet_index[f]] != s:
                out = Triangulation(out.dim, out.facets, out.order, tuple(-x for x in out.signs))
            break
    return out


def reverse_site(T: Triangulation, site: MoveSite) -> MoveSite:
    """The site in ``T`` (the result of applying ``site``) that undoes it.

    Undoing a vertex removal needs a fresh vertex, so it is exact only up to
    relabeling of that vertex."""
    if len(site.sigma) == 1:
        sigma, apex = site.apex, (max(T.order) + 1,)
    else:
        sigma, apex = site.apex, site.sigma
    return MoveSite(site.j, site.i, sigma, apex, tuple(T.star(sigma)))


def random_walk(T: Triangulation, steps: int, seed: int, max_facets: int | None = None,
                kinds=None):
    """Apply ``steps`` random legal moves.  Returns (complex, log lines).

    Each step draws a move type uniformly; types without a legal site are
    redrawn, and types that would push the facet count over ``max_facets``
    are rejected and noted in the log as comment lines.
    """
    rng = random.Random(seed)
    kinds = list(kinds) if kinds is not None else move_types(T.dim)
    log = []
    for _ in range(steps):
        tried = set()
        while True:
            if len(tried) == len(kinds):
                raise TriangulationError("no legal move within the facet cap")
            kind = rng.choice(kinds)
            if kind in tried:
                continue
            tried.add(kind)
            if max_facets is not None and len(T.facets) + kind[1] - kind[0] > max_facets:
                log.append(f"# rejected TYPE {kind[0]} {kind[1]} (facet cap {max_facets})")
                continue
            sites = find_moves(T, kind)
            if sites:
                break
        site = rng.choice(sites)
        T = apply_move(T, site)
        log.append(site.format())
    return T, log


def parse_move(line: str) -> tuple:
    parts = [p.split() for p in line.split(";")]
    if len(parts) != 3 or parts[0][0] != "TYPE" or parts[1][0] != "sigma" or parts[2][0] != "apex":
        raise ValueError(f"bad move line: {line!r}")
    i, j = int(parts[0][1]), int(parts[0][2])
    return (i, j), tuple(map(int, parts[1][1:])), tuple(map(int, parts[2][1:]))


def replay(T: Triangulation, lines) -> Triangulation:
    for line in lines:
        if line.lstrip().startswith("#") or not line.strip():
            continue
        kind, sigma, apex = parse_move(line)
        site = MoveSite(kind[0], kind[1], sigma, apex, tuple(T.star(sigma)))
        T = apply_move(T, site)
    return T
