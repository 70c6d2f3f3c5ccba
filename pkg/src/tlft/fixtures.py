"""Small closed triangulations used as test and experiment inputs."""
from __future__ import annotations

from pathlib import Path

from .simplicial import (Triangulation, boundary_simplex, cycle, orient,
                         serialize_triangulation, simplicial_product)


def sphere(d: int) -> Triangulation:
    """Boundary of the (d+1)-simplex."""
    return orient(boundary_simplex(d))


def torus7() -> Triangulation:
    """The 7-vertex (Moebius) torus: triangles {i, i+1, i+3}, {i, i+2, i+3} mod 7."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return orient(Triangulation.from_facets(2, facets))


def klein_bottle() -> Triangulation:
    """3 x 3 grid of squares, each cut along a diagonal, with the two sides
    glued straight and the top and bottom glued with a flip (not orientable)."""
    a = b = 3

    def v(i, j):
        if j == b:
            i, j = -i, 0
        return (i % a) * b + j
    facets = []
    for i in range(a):
        for j in range(b):
            p, q, r, s = v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)
            facets += [(p, q, s), (p, r, s)]
    return Triangulation.from_facets(2, facets)


def s2xs1() -> Triangulation:
    return orient(simplicial_product(boundary_simplex(2), cycle(3)))


def t3() -> Triangulation:
    return orient(simplicial_product(simplicial_product(cycle(3), cycle(3)), cycle(3)))


def s3xs1() -> Triangulation:
    return orient(simplicial_product(boundary_simplex(3), cycle(3)))


def s2xt2() -> Triangulation:
    return orient(simplicial_product(boundary_simplex(2), simplicial_product(cycle(3), cycle(3))))


FIXTURES = {
    "s2": lambda: sphere(2),
    "s3": lambda: sphere(3),
    "s4": lambda: sphere(4),
    "torus7": torus7,
    "klein": klein_bottle,
    "s2xs1": s2xs1,
    "t3": t3,
    "s3xs1": s3xs1,
}


def write_all(directory) -> list:
    out = []
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name, build in FIXTURES.items():
        p = d / f"{name}.tri"
        p.write_text(serialize_triangulation(build()), encoding="utf-8")
        out.append(p)
    return out
