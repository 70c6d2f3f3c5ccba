"""Ordered, oriented simplicial complexes of small dimension.

A complex is stored by its facets (sorted vertex tuples).  The vertex order
used by all sign computations is kept separately in ``order`` so it can be
permuted without touching the facets.  Orientation signs are stored per facet
relative to the increasing *label* order of the facet tuple.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product


class TriangulationError(ValueError):
    pass


def perm_parity(seq) -> int:
    """+1 for an even arrangement of distinct sortable items, -1 for odd."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class Triangulation:
    dim: int
    facets: tuple
    order: tuple = ()
    signs: tuple | None = None
    _rank: dict = field(default=None, repr=False, compare=False, hash=False)

    @classmethod
    def from_facets(cls, dim, facets, order=None, signs=None):
        pairs = []
        for i, f in enumerate(facets):
            t = tuple(int(v) for v in f)
            if len(t) != dim + 1:
                raise TriangulationError(f"facet {t} does not have {dim + 1} vertices")
            if len(set(t)) != len(t):
                raise TriangulationError(f"repeated vertex in facet {t}")
            if min(t) < 0:
                raise TriangulationError(f"negative vertex in facet {t}")
            st = tuple(sorted(t))
            s = None if signs is None else signs[i] * perm_parity(t)
            pairs.append((st, s))
        pairs.sort()
        fac = tuple(p[0] for p in pairs)
        if len(set(fac)) != len(fac):
            raise TriangulationError("duplicate facet")
        verts = sorted({v for f in fac for v in f})
        if order is None:
            order = tuple(verts)
        else:
            order = tuple(int(v) for v in order)
            if sorted(order) != verts:
                raise TriangulationError("order is not a permutation of the vertex set")
        sg = None if signs is None else tuple(p[1] for p in pairs)
        return cls(dim, fac, order, sg)

    def __post_init__(self):
        object.__setattr__(self, "_rank", {v: i for i, v in enumerate(self.order)})

    # basic data
    @property
    def rank(self) -> dict:
        """Position of each vertex in the order O."""
        return self._rank

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(self.order))

    @property
    def vertex_count(self) -> int:
        return len(self.order)

    @property
    def oriented(self) -> bool:
        return self.signs is not None

    @cached_property
    def facet_index(self) -> dict:
        return {f: i for i, f in enumerate(self.facets)}

    @cached_property
    def _faces(self) -> dict:
        out = {}
        for k in range(self.dim + 1):
            s = set()
            for f in self.facets:
                s.update(combinations(f, k + 1))
            out[k] = tuple(sorted(s))
        return out

    def faces(self, k: int) -> tuple:
        return self._faces.get(k, ())

    @cached_property
    def _star(self) -> dict:
        st = defaultdict(list)
        for f in self.facets:
            for k in range(1, self.dim + 2):
                for c in combinations(f, k):
                    st[c].append(f)
        return dict(st)

    def star(self, simplex) -> list:
        """Facets containing ``simplex`` (a sorted tuple)."""
        return self._star.get(tuple(sorted(simplex)), [])

    def has_simplex(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self._star

    def f_vector(self) -> tuple:
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def sorted_by_order(self, simplex) -> tuple:
        return tuple(sorted(simplex, key=self.rank.__getitem__))

    def orientation_in_order(self, facet) -> int:
        """Sign of the facet with vertices listed in O-ascending order."""
        if self.signs is None:
            raise TriangulationError("complex is not oriented")
        facet = tuple(sorted(facet))
        s = self.signs[self.facet_index[facet]]
        return s * perm_parity(self.sorted_by_order(facet))

    def ordered_sign(self, seq) -> int:
        """Orientation sign of a facet given as an arbitrary vertex sequence."""
        facet = tuple(sorted(seq))
        return self.signs[self.facet_index[facet]] * perm_parity(seq)

    def with_order(self, order) -> "Triangulation":
        return Triangulation.from_facets(self.dim, self.facets, order, self.signs)

    def relabel(self, mapping) -> "Triangulation":
        facs = [tuple(mapping[v] for v in f) for f in self.facets]
        signs = None if self.signs is None else list(self.signs)
        return Triangulation.from_facets(self.dim, facs, [mapping[v] for v in self.order], signs)

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        return (self.dim, self.facets, self.order, self.signs) == (
            other.dim, other.facets, other.order, other.signs)

    def __hash__(self):
        return hash((self.dim, self.facets, self.order, self.signs))


# validation

def ridge_counts(T: Triangulation) -> dict:
    cnt = defaultdict(int)
    for f in T.facets:
        for r in combinations(f, T.dim):
            cnt[r] += 1
    return cnt


def is_closed(T: Triangulation) -> bool:
    return all(c == 2 for c in ridge_counts(T).values())


def _strongly_connected(facets, dim) -> bool:
    if not facets:
        return True
    if dim == 0:
        return len(facets) == 1
    by_ridge = defaultdict(list)
    for i, f in enumerate(facets):
        for r in combinations(f, dim):
            by_ridge[r].append(i)
    seen = {0}
    todo = [0]
    while todo:
        i = todo.pop()
        for r in combinations(facets[i], dim):
            for j in by_ridge[r]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
    return len(seen) == len(facets)


def is_connected(T: Triangulation) -> bool:
    return _strongly_connected(T.facets, T.dim)


def validate(T: Triangulation) -> None:
    """Raise TriangulationError unless T is a closed pseudo-manifold whose
    vertex links are connected (and, in dimension 4, whose 2-face links are
    single cycles)."""
    if not 1 <= T.dim <= 4:
        raise TriangulationError(f"dimension {T.dim} outside 1..4")
    if not T.facets:
        raise TriangulationError("empty complex")
    for r, c in sorted(ridge_counts(T).items()):
        if c != 2:
            raise TriangulationError(f"ridge {r} is contained in {c} facet(s)")
    if T.dim >= 2:
        for v in T.vertices:
            L = link(T, (v,))
            if not _strongly_connected(L.facets, L.dim):
                raise TriangulationError(f"link of vertex {v} is not connected")
    if T.dim == 4:
        for f in T.faces(2):
            link_cycle(T, f)


# constructions

def boundary_simplex(n: int) -> Triangulation:
    """The boundary of the (n+1)-simplex on vertices 0..n+1, a closed n-sphere."""
    return Triangulation.from_facets(n, combinations(range(n + 2), n + 1))


def cycle(n: int) -> Triangulation:
    """A circle with n >= 3 vertices."""
    return Triangulation.from_facets(1, [(i, (i + 1) % n) for i in range(n)])


def euler_characteristic(T: Triangulation) -> int:
    return sum((-1) ** k * c for k, c in enumerate(T.f_vector()))


def link(T: Triangulation, simplex) -> Triangulation:
    s = tuple(sorted(simplex))
    st = T.star(s)
    if not st:
        raise TriangulationError(f"{s} is not a simplex of the complex")
    facs = [tuple(v for v in f if v not in s) for f in st]
    verts = {v for f in facs for v in f}
    order = [v for v in T.order if v in verts]
    return Triangulation.from_facets(T.dim - len(s), facs, order)


def orient(T: Triangulation) -> Triangulation:
    """Choose consistent facet signs; the lexicographically O-least facet is
    positive when its vertices are read in O order."""
    if not is_closed(T):
        raise TriangulationError("cannot orient a complex that is not closed")
    n = len(T.facets)
    by_ridge = defaultdict(list)
    for i, f in enumerate(T.facets):
        for p in range(len(f)):
            by_ridge[f[:p] + f[p + 1:]].append((i, p))
    start = min(range(n), key=lambda i: [T.rank[v] for v in T.sorted_by_order(T.facets[i])])
    signs = [0] * n
    signs[start] = perm_parity(T.sorted_by_order(T.facets[start]))
    todo = deque([start])
    while todo:
        i = todo.popleft()
        f = T.facets[i]
        for p in range(len(f)):
            r = f[:p] + f[p + 1:]
            for j, q in by_ridge[r]:
                if j == i:
                    continue
                want = -signs[i] * (-1) ** p * (-1) ** q
                if signs[j] == 0:
                    signs[j] = want
                    todo.append(j)
                elif signs[j] != want:
                    raise TriangulationError("complex is not orientable")
    if 0 in signs:
        raise TriangulationError("complex is not connected")
    return Triangulation(T.dim, T.facets, T.order, tuple(signs))


def signed_boundary(T: Triangulation) -> dict:
    """Coefficient of each ridge (sorted tuple) in the boundary of the
    oriented facet chain; all zero for a closed oriented complex."""
    out = defaultdict(int)
    for f, s in zip(T.facets, T.signs):
        for p in range(len(f)):
            out[f[:p] + f[p + 1:]] += s * (-1) ** p
    return dict(out)


def simplicial_product(A: Triangulation, B: Triangulation) -> Triangulation:
    """Staircase triangulation of |A| x |B|.

    Vertex (u, w) becomes rank(u) * |V(B)| + rank(w), where ranks come from
    the vertex orders; the result carries the natural order on labels.
    """
    d = A.dim + B.dim
    if d > 4:
        raise TriangulationError(f"product dimension {d} exceeds 4")
    nb = B.vertex_count
    facets = []
    for fa, fb in product(A.facets, B.facets):
        ua = A.sorted_by_order(fa)
        wb = B.sorted_by_order(fb)
        for steps in combinations(range(d), A.dim):
            i = j = 0
            path = [(i, j)]
            for s in range(d):
                if s in steps:
                    i += 1
                else:
                    j += 1
                path.append((i, j))
            facets.append(tuple(A.rank[ua[i]] * nb + B.rank[wb[j]] for i, j in path))
    return Triangulation.from_facets(d, facets)


def link_cycle(T: Triangulation, face) -> list:
    """Vertices of the link of a codimension-2 simplex as a cyclic sequence.

    Starts at the O-least link vertex; direction follows increasing label of
    the second vertex (unoriented version of face_link_cycle)."""
    f = tuple(sorted(face))
    adj = defaultdict(list)
    for s in T.star(f):
        a, b = [v for v in s if v not in f]
        adj[a].append(b)
        adj[b].append(a)
    if not adj or any(len(x) != 2 for x in adj.values()):
        raise TriangulationError(f"link of {f} is not a cycle")
    start = min(adj, key=T.rank.__getitem__)
    cyc = [start]
    prev, cur = None, start
    nxt = min(adj[start])
    while nxt != start:
        cyc.append(nxt)
        prev, cur = cur, nxt
        a, b = adj[cur]
        nxt = b if a == prev else a
    if len(cyc) != len(adj):
        raise TriangulationError(f"link of {f} is not a single cycle")
    return cyc


def face_link_cycle(T: Triangulation, face) -> list:
    """Link of a codimension-2 simplex as a cycle (w0, w1, ...), directed so
    that (face in O order, w_i, w_{i+1}) is positively oriented."""
    cyc = link_cycle(T, face)
    fo = T.sorted_by_order(face)
    if T.ordered_sign(fo + (cyc[0], cyc[1])) < 0:
        cyc = [cyc[0]] + cyc[:0:-1]
    return cyc


# file format

def parse_triangulation(text: str) -> Triangulation:
    dim = None
    order = None
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        try:
            if words[0] == "dim":
                if dim is not None or len(words) != 2:
                    raise TriangulationError("bad dim line")
                dim = int(words[1])
                if not 2 <= dim <= 4:
                    raise TriangulationError(f"dimension {dim} outside 2..4")
            elif words[0] == "order":
                order = [int(w) for w in words[1:]]
            else:
                if dim is None:
                    raise TriangulationError("facet before dim line")
                facets.append(tuple(int(w) for w in words))
        except ValueError as exc:
            raise TriangulationError(f"line {lineno}: {exc}") from None
    if dim is None:
        raise TriangulationError("missing dim line")
    T = Triangulation.from_facets(dim, facets, order)
    validate(T)
    return T


def serialize_triangulation(T: Triangulation) -> str:
    lines = [f"dim {T.dim}"]
    if T.order != T.vertices:
        lines.append("order " + " ".join(map(str, T.order)))
    lines += [" ".join(map(str, f)) for f in T.facets]
    return "\n".join(lines) + "\n"


def load(path) -> Triangulation:
    with open(path, encoding="utf-8") as fh:
        return parse_triangulation(fh.read())
