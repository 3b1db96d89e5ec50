"""Double-star decompositions of bipartite graphs via 1-factorizations."""

from __future__ import annotations

from ..errors import (
    BadShapeError,
    DegreeNotDivisibleError,
    DivisibilityViolatedError,
    NoValidSplitError,
    NotBipartiteError,
    NotRegularError,
)
from ..factorize import one_factorization_bipartite, split_regular_spanning
from ..graph import SIDE_A, SPLIT_CLONE, Bipartition, Graph, VertexMap, bipartition, is_regular
from .types import Decomposition, DoubleStar, Shape


def _sides(g: Graph, b: Bipartition | None) -> Bipartition:
    if b is None:
        b = bipartition(g)
    if b is None or not b.is_valid_for(g):
        raise NotBipartiteError("graph is not bipartite")
    return b


def _regular(g: Graph) -> int:
    r = is_regular(g)
    if r is None:
        raise NotRegularError("graph is not regular")
    return r


def _check_shape(k1: int, k2: int) -> None:
    if k1 < 1 or k2 < 1:
        raise BadShapeError(f"shape ({k1}, {k2}) needs both pendant sets non-empty")


def decompose_regular_bipartite(
    g: Graph, k1: int, k2: int, b: Bipartition | None = None
) -> Decomposition:
    """Every double-star of size r decomposes an r-regular bipartite graph.

    1-factorize into ``M_1..M_r``.  Each edge ``u1 u2`` of ``M_r`` (``u1`` on
    side A) centres a star whose X-side is ``u1``'s edges in ``M_1..M_k1`` and
    whose Y-side is ``u2``'s edges in ``M_{k1+1}..M_{r-1}``.
    """
    b = _sides(g, b)
    r = _regular(g)
    _check_shape(k1, k2)
    if k1 + k2 + 1 != r:
        raise BadShapeError(f"S({k1},{k2}) has size {k1 + k2 + 1}, graph is {r}-regular")
    factors = one_factorization_bipartite(g, b)
    first = frozenset().union(*factors[:k1])
    second = frozenset().union(*factors[k1 : r - 1])
    stars = []
    for e in sorted(factors[r - 1]):
        u, v = g.endpoints(e)
        u1, u2 = (u, v) if b.side[u] == SIDE_A else (v, u)
        x = tuple((w, f) for w, f in g.adjacency(u1) if f in first)
        y = tuple((w, f) for w, f in g.adjacency(u2) if f in second)
        stars.append(DoubleStar(u1, u2, e, x, y))
    return Decomposition(tuple(stars), frozenset({(k1, k2)}), "bipartite")


def decompose_bipartite_divisible(
    g: Graph, k1: int, k2: int, b: Bipartition | None = None
) -> Decomposition:
    """Size-s double-stars decompose r-regular bipartite graphs when s divides r."""
    b = _sides(g, b)
    r = _regular(g)
    _check_shape(k1, k2)
    s = k1 + k2 + 1
    if r % s:
        raise DivisibilityViolatedError(f"star size {s} does not divide degree {r}")
    stars: list[DoubleStar] = []
    for piece in split_regular_spanning(g, [s] * (r // s)):
        stars.extend(decompose_regular_bipartite(piece, k1, k2, b).stars)
    return Decomposition(tuple(stars), frozenset({(k1, k2)}), "bipartite-divisible")


def decompose_bipartite_two_sizes(
    g: Graph, shape_s: Shape, shape_t: Shape, b: Bipartition | None = None
) -> Decomposition:
    """Split an r-regular bipartite graph into q s-regular pieces and one
    t-regular piece (``r = s*q + t``) and decompose each."""
    b = _sides(g, b)
    r = _regular(g)
    (k1, k2), (l1, l2) = shape_s, shape_t
    _check_shape(k1, k2)
    _check_shape(l1, l2)
    s, t = k1 + k2 + 1, l1 + l2 + 1
    q, rem = divmod(r - t, s)
    if r - t < s or rem:
        raise NoValidSplitError(f"{r} is not {s}*q + {t} with q >= 1")
    pieces = split_regular_spanning(g, [s] * q + [t])
    stars: list[DoubleStar] = []
    for piece in pieces[:q]:
        stars.extend(decompose_regular_bipartite(piece, k1, k2, b).stars)
    stars.extend(decompose_regular_bipartite(pieces[q], l1, l2, b).stars)
    return Decomposition(tuple(stars), frozenset({(k1, k2), (l1, l2)}), "bipartite-two-sizes")


IDENTITY = "identity"


def split_vertices(g: Graph, b: Bipartition | None, r: int) -> tuple[Graph, VertexMap]:
    """Replace each vertex of degree ``r*k`` by ``k`` clones of degree ``r``.

    Clone ``i`` of ``v`` takes the ``i``-th block of ``r`` neighbours in
    ascending order.  Clones are numbered consecutively in vertex order and
    isolated vertices are dropped.  Edge indices are unchanged.
    """
    b = _sides(g, b)
    if r < 1:
        raise ValueError("r must be positive")
    new_id: dict[tuple[int, int], int] = {}
    forward: list[int] = []
    tags: list[str] = []
    for v in range(g.n):
        d = g.degree(v)
        if d % r:
            raise DegreeNotDivisibleError(v, d, r)
        for i in range(d // r):
            new_id[(v, i)] = len(forward)
            forward.append(v)
            tags.append(SPLIT_CLONE if d > r else IDENTITY)
    endpoint_of: dict[tuple[int, int], int] = {}  # (vertex, edge) -> clone holding it
    for v in range(g.n):
        for pos, (_, e) in enumerate(g.adjacency(v)):
            endpoint_of[(v, e)] = new_id[(v, pos // r)]
    edges = {e: (endpoint_of[(u, e)], endpoint_of[(v, e)]) for e, (u, v) in g.edges.items()}
    return Graph(len(forward), edges), VertexMap(tuple(forward), tuple(tags))


def decompose_bipartite_degree_divisible(
    g: Graph, k1: int, k2: int, b: Bipartition | None = None
) -> Decomposition:
    """Bipartite graphs whose degrees are all multiples of r = k1+k2+1."""
    b = _sides(g, b)
    _check_shape(k1, k2)
    r = k1 + k2 + 1
    h, vmap = split_vertices(g, b, r)
    hb = Bipartition(tuple(b.side[v] for v in vmap.forward))
    if h.m == 0:
        return Decomposition((), frozenset({(k1, k2)}), "degree-divisible")
    inner = decompose_regular_bipartite(h, k1, k2, hb)
    stars = tuple(s.relabel(vmap) for s in inner.stars)
    return Decomposition(stars, frozenset({(k1, k2)}), "degree-divisible")
