"""Undirected simple graphs with stable edge indices.

Vertices are the integers ``0..n-1``.  Every edge carries an integer index
that survives edge removal, so decompositions, orientations and matchings
refer to edges by index rather than by endpoint pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateEdgeError,
    SelfLoopError,
    UnknownEdgeIndexError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]

SIDE_A = 0
SIDE_B = 1


class Graph:
    """Immutable undirected simple graph.

    ``edges`` maps edge index to the endpoint pair ``(u, v)`` with ``u < v``.
    Adjacency lists hold ``(neighbour, edge_index)`` pairs in ascending
    neighbour order.
    """

    __slots__ = ("_n", "_edges", "_adj", "_lookup")

    def __init__(self, n: int, edges: Mapping[int, Edge]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self._n = n
        self._edges: dict[int, Edge] = {}
        self._lookup: dict[Edge, int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for idx in sorted(edges):
            u, v = edges[idx]
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge {idx} = {{{u},{v}}} outside [0, {n})")
            if u == v:
                raise SelfLoopError(f"edge {idx} is a self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in self._lookup:
                raise DuplicateEdgeError(f"edge {{{key[0]},{key[1]}}} appears twice")
            self._edges[idx] = key
            self._lookup[key] = idx
            adj[u].append((v, idx))
            adj[v].append((u, idx))
        for row in adj:
            row.sort()
        self._adj = tuple(tuple(row) for row in adj)

    # -- basic queries --------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> Mapping[int, Edge]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def edge_ids(self) -> list[int]:
        return list(self._edges)

    def endpoints(self, e: int) -> Edge:
        try:
            return self._edges[e]
        except KeyError:
            raise UnknownEdgeIndexError(f"unknown edge index {e}") from None

    def other(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def adjacency(self, v: int) -> tuple[tuple[int, int], ...]:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self._adj[v]]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._lookup

    def edge_index(self, u: int, v: int) -> int | None:
        return self._lookup.get((u, v) if u < v else (v, u))

    def __contains__(self, e: object) -> bool:
        return e in self._edges

    def __iter__(self) -> Iterator[tuple[int, Edge]]:
        return iter(self._edges.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._edges.items())))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    def same_edge_set(self, other: Graph) -> bool:
        """Equality up to edge-index relabelling."""
        return self._n == other._n and set(self._lookup) == set(other._lookup)

    def edge_list(self) -> list[Edge]:
        return list(self._edges.values())


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph whose edge indices follow the input order."""
    edges: dict[int, Edge] = {}
    for i, pair in enumerate(edge_list):
        u, v = pair
        edges[i] = (int(u), int(v))
    # Graph() sorts indices, which here equals input order.
    return Graph(n, edges)


def is_regular(g: Graph) -> int | None:
    """Common degree of ``g``, or ``None`` if degrees differ.

    The graph with no vertices counts as 0-regular.
    """
    if g.n == 0:
        return 0
    degrees = g.degrees()
    r = degrees[0]
    return r if all(d == r for d in degrees) else None


@dataclass(frozen=True)
class Bipartition:
    """Side label per vertex: ``SIDE_A`` (0) or ``SIDE_B`` (1)."""

    side: tuple[int, ...]

    def part(self, label: int) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == label]

    @property
    def a(self) -> list[int]:
        return self.part(SIDE_A)

    @property
    def b(self) -> list[int]:
        return self.part(SIDE_B)

    def is_valid_for(self, g: Graph) -> bool:
        if len(self.side) != g.n:
            return False
        return all(self.side[u] != self.side[v] for u, v in g.edges.values())


def bipartition(g: Graph) -> Bipartition | None:
    """2-colour ``g`` by BFS, each component rooted at its lowest vertex on side A."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = SIDE_A
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, _ in g.adjacency(v):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return Bipartition(tuple(side))


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    return set(g.neighbors(u)) & set(g.neighbors(v))


def is_triangle_free(g: Graph) -> bool:
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    return all(not (nbrs[u] & nbrs[v]) for u, v in g.edges.values())


@dataclass(frozen=True)
class VertexMap:
    """Maps vertices of a derived graph back to the graph they came from."""

    forward: tuple[int, ...]
    tags: tuple[str, ...]

    def __call__(self, v: int) -> int:
        return self.forward[v]

    def __len__(self) -> int:
        return len(self.forward)


PRODUCT_COPY_1 = "product-copy-1"
PRODUCT_COPY_2 = "product-copy-2"
SPLIT_CLONE = "split-clone"


def cartesian_product_k2(g: Graph) -> tuple[Graph, VertexMap]:
    """``g`` times ``K_2``.

    Vertex ``i`` of ``g`` becomes ``i`` (first copy) and ``n + i`` (second
    copy).  Edge indices of the result: first-copy edges ``0..m-1`` in the
    order of ``g``'s edge indices, then second-copy edges ``m..2m-1``, then the
    rungs ``{i, n+i}`` at ``2m + i``.
    """
    n, m = g.n, g.m
    edges: dict[int, Edge] = {}
    for pos, (u, v) in enumerate(g.edges.values()):
        edges[pos] = (u, v)
        edges[m + pos] = (n + u, n + v)
    for i in range(n):
        edges[2 * m + i] = (i, n + i)
    vmap = VertexMap(
        forward=tuple(range(n)) * 2,
        tags=(PRODUCT_COPY_1,) * n + (PRODUCT_COPY_2,) * n,
    )
    return Graph(2 * n, edges), vmap


def remove_edges(g: Graph, s: Iterable[int]) -> Graph:
    """Spanning subgraph without the edges in ``s``; survivors keep their indices."""
    drop = set(s)
    unknown = drop - set(g.edges)
    if unknown:
        raise UnknownEdgeIndexError(f"unknown edge indices {sorted(unknown)}")
    return Graph(g.n, {e: uv for e, uv in g.edges.items() if e not in drop})


def edge_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Spanning subgraph on exactly the edges in ``keep``."""
    keep = set(keep)
    unknown = keep - set(g.edges)
    if unknown:
        raise UnknownEdgeIndexError(f"unknown edge indices {sorted(unknown)}")
    return Graph(g.n, {e: uv for e, uv in g.edges.items() if e in keep})


def add_edges(g: Graph, extra: Mapping[int, Edge]) -> Graph:
    """Union of ``g`` and ``extra`` (indices must not clash)."""
    clash = set(extra) & set(g.edges)
    if clash:
        raise ValueError(f"edge indices already present: {sorted(clash)}")
    merged = dict(g.edges)
    merged.update(extra)
    return Graph(g.n, merged)
