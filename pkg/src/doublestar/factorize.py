"""Orientations, 1-factorizations and 2-factorizations of regular graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegreeSumMismatchError,
    InvalidFactorizationError,
    NotBipartiteError,
    NotEvenRegularError,
    NotRegularError,
    OddDegreeVertexError,
    UnsupportedSplitError,
)
from .graph import SIDE_A, Bipartition, Graph, bipartition, build_graph, edge_subgraph, is_regular
from .matching import find_perfect_matching, is_perfect_matching, iter_perfect_matchings

ONE_FACTORIZATION_BUDGET = 1_000_000


class Orientation:
    """A direction for every edge of ``graph``.

    ``forward[e]`` is true when edge ``e = (u, v)``, ``u < v``, points from
    ``u`` to ``v``.
    """

    __slots__ = ("graph", "forward", "_out")

    def __init__(self, graph: Graph, forward: dict[int, bool]):
        if set(forward) != set(graph.edges):
            raise ValueError("orientation must assign every edge exactly once")
        self.graph = graph
        self.forward = dict(forward)
        out: list[list[tuple[int, int]]] = [[] for _ in range(graph.n)]
        for e, (u, v) in graph.edges.items():
            if self.forward[e]:
                out[u].append((v, e))
            else:
                out[v].append((u, e))
        for row in out:
            row.sort()
        self._out = out

    @classmethod
    def from_arcs(cls, graph: Graph, arcs: dict[int, int]) -> Orientation:
        """Build from ``{edge: tail}``."""
        return cls(graph, {e: graph.endpoints(e)[0] == tail for e, tail in arcs.items()})

    def tail(self, e: int) -> int:
        u, v = self.graph.endpoints(e)
        return u if self.forward[e] else v

    def head(self, e: int) -> int:
        u, v = self.graph.endpoints(e)
        return v if self.forward[e] else u

    def out_neighbors(self, v: int) -> list[tuple[int, int]]:
        """``(head, edge)`` pairs leaving ``v``, ascending by head."""
        return list(self._out[v])

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return self.graph.degree(v) - len(self._out[v])

    def is_eulerian(self) -> bool:
        return all(2 * self.out_degree(v) == self.graph.degree(v) for v in range(self.graph.n))

    def reversed(self) -> Orientation:
        return Orientation(self.graph, {e: not f for e, f in self.forward.items()})

    def __repr__(self) -> str:
        return f"Orientation({self.graph!r})"


@dataclass(frozen=True)
class TwoFactor:
    """A spanning 2-regular edge set and its cycles.

    ``cycles[i]`` lists the vertices of the i-th cycle starting at its lowest
    vertex and continuing towards the smaller of that vertex's two factor
    neighbours; ``cycle_edges[i][j]`` joins ``cycles[i][j]`` to the next vertex.
    Cycles are ordered by lowest vertex.
    """

    edges: frozenset[int]
    cycles: tuple[tuple[int, ...], ...]
    cycle_edges: tuple[tuple[int, ...], ...]


def eulerian_orientation(g: Graph) -> Orientation:
    """Orient every edge along Hierholzer walks so in- and out-degree agree."""
    for v in range(g.n):
        if g.degree(v) % 2:
            raise OddDegreeVertexError(v)
    incident = [sorted(e for _, e in g.adjacency(v)) for v in range(g.n)]
    ptr = [0] * g.n
    used: set[int] = set()
    tails: dict[int, int] = {}
    for start in range(g.n):
        stack = [start]
        while stack:
            v = stack[-1]
            row = incident[v]
            while ptr[v] < len(row) and row[ptr[v]] in used:
                ptr[v] += 1
            if ptr[v] == len(row):
                stack.pop()
                continue
            e = row[ptr[v]]
            used.add(e)
            tails[e] = v
            stack.append(g.other(e, v))
    return Orientation.from_arcs(g, tails)


def _require_regular(g: Graph) -> int:
    r = is_regular(g)
    if r is None:
        raise NotRegularError("graph is not regular")
    return r


def _bipartite_perfect_matching(g: Graph, side: Sequence[int], available: set[int]) -> set[int]:
    """Perfect matching of the bipartite graph on the ``available`` edges.

    Plain BFS augmenting paths from each free A-vertex in ascending order.
    """
    n = g.n
    mate_edge: list[int | None] = [None] * n
    a_side = [v for v in range(n) if side[v] == SIDE_A]
    adj = [[(w, e) for w, e in g.adjacency(v) if e in available] for v in range(n)]
    for root in a_side:
        if mate_edge[root] is not None:
            continue
        # BFS over A-vertices; prev[b] = (a, edge) reaching B-vertex b
        prev: dict[int, tuple[int, int]] = {}
        queue = deque([root])
        free_b = None
        while queue and free_b is None:
            a = queue.popleft()
            for b, e in adj[a]:
                if b in prev:
                    continue
                prev[b] = (a, e)
                if mate_edge[b] is None:
                    free_b = b
                    break
                queue.append(g.other(mate_edge[b], b))  # type: ignore[arg-type]
        if free_b is None:
            raise NotRegularError("residual bipartite graph has no perfect matching")
        b = free_b
        while True:
            a, e = prev[b]
            old = mate_edge[a]
            mate_edge[a] = e
            mate_edge[b] = e
            if a == root:
                break
            b = g.other(old, a)  # type: ignore[arg-type]
    return {e for e in mate_edge if e is not None}


def one_factorization_bipartite(g: Graph, b: Bipartition | None = None) -> list[frozenset[int]]:
    """Split an r-regular bipartite graph into r perfect matchings."""
    r = _require_regular(g)
    if b is None:
        b = bipartition(g)
    if b is None or not b.is_valid_for(g):
        raise NotBipartiteError("graph is not bipartite under the given sides")
    if len(b.a) != len(b.b):
        raise NotRegularError("sides differ in size")
    available = set(g.edges)
    factors = []
    for _ in range(r):
        m = _bipartite_perfect_matching(g, b.side, available)
        available -= m
        factors.append(frozenset(m))
    return factors


def _cycles_of(g: Graph, edges: frozenset[int]) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    nbrs: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
    for e in edges:
        u, v = g.endpoints(e)
        nbrs[u].append((v, e))
        nbrs[v].append((u, e))
    seen = [False] * g.n
    cycles, cycle_edges = [], []
    for start in range(g.n):
        if seen[start]:
            continue
        verts, es = [start], []
        seen[start] = True
        prev_e = None
        v = start
        while True:
            options = sorted(p for p in nbrs[v] if p[1] != prev_e)
            w, e = options[0]
            es.append(e)
            if w == start:
                break
            seen[w] = True
            verts.append(w)
            prev_e = e
            v = w
        cycles.append(tuple(verts))
        cycle_edges.append(tuple(es))
    return tuple(cycles), tuple(cycle_edges)


def make_two_factor(g: Graph, edges: frozenset[int]) -> TwoFactor:
    deg = [0] * g.n
    for e in edges:
        for v in g.endpoints(e):
            deg[v] += 1
    if any(d != 2 for d in deg):
        raise ValueError("edge set is not a spanning 2-regular subgraph")
    cycles, cycle_edges = _cycles_of(g, frozenset(edges))
    return TwoFactor(frozenset(edges), cycles, cycle_edges)


def two_factorization(g: Graph) -> list[TwoFactor]:
    """Split a 2k-regular graph into k edge-disjoint 2-factors.

    The Eulerian orientation turns ``g`` into a k-regular bipartite graph on
    out-copies and in-copies; each of its perfect matchings gives every vertex
    one outgoing and one incoming edge, i.e. a 2-factor of ``g``.
    """
    r = is_regular(g)
    if r is None or r % 2:
        raise NotEvenRegularError("graph is not regular of even degree")
    if r == 0:
        return []
    orient = eulerian_orientation(g)
    order = g.edge_ids()
    aux = build_graph(2 * g.n, [(orient.tail(e), g.n + orient.head(e)) for e in order])
    sides = Bipartition(tuple([SIDE_A] * g.n + [1] * g.n))
    factors = one_factorization_bipartite(aux, sides)
    return [make_two_factor(g, frozenset(order[i] for i in f)) for f in factors]


def _validate_factorization(g: Graph, factors: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    seen: set[int] = set()
    out = []
    for f in factors:
        f = frozenset(f)
        if not is_perfect_matching(g, f) or f & seen:
            raise InvalidFactorizationError("supplied factors are not disjoint perfect matchings")
        seen |= f
        out.append(f)
    if seen != set(g.edges):
        raise InvalidFactorizationError("supplied factors do not cover every edge")
    return out


def one_factorization_general(
    g: Graph,
    *,
    budget: int = ONE_FACTORIZATION_BUDGET,
    supplied: Sequence[frozenset[int]] | None = None,
) -> list[frozenset[int]] | None:
    """Peel perfect matchings off an r-regular graph, backtracking when stuck.

    Returns ``None`` when ``g`` is not 1-factorable or ``budget`` search nodes
    are used up.  A ``supplied`` factorization is validated and returned.
    """
    if supplied is not None:
        return _validate_factorization(g, supplied)
    r = _require_regular(g)
    if r == 0:
        return []
    b = bipartition(g)
    if b is not None and len(b.a) == len(b.b):
        return one_factorization_bipartite(g, b)
    nodes = 0

    def rec(h: Graph, depth: int) -> list[frozenset[int]] | None:
        nonlocal nodes
        if depth == 0:
            return []
        if find_perfect_matching(h) is None:
            return None
        for m in iter_perfect_matchings(h):
            nodes += 1
            if nodes > budget:
                return None
            rest = rec(Graph(h.n, {e: uv for e, uv in h.edges.items() if e not in m}), depth - 1)
            if rest is not None:
                return [m] + rest
            if nodes > budget:
                return None
        return None

    return rec(g, r)


def split_regular_spanning(
    g: Graph,
    piece_degrees: Sequence[int],
    factorization: Sequence[frozenset[int]] | None = None,
) -> list[Graph]:
    """Cut an r-regular graph into spanning regular pieces of the given degrees.

    Pieces are built from consecutive 1-factors (bipartite ``g`` or a supplied
    1-factorization) or, when every requested degree is even, from 2-factors.
    """
    r = _require_regular(g)
    if sum(piece_degrees) != r or any(d < 0 for d in piece_degrees):
        raise DegreeSumMismatchError(f"piece degrees {list(piece_degrees)} do not sum to {r}")
    if factorization is not None:
        units = [(1, f) for f in _validate_factorization(g, factorization)]
    else:
        b = bipartition(g)
        if b is not None and len(b.a) == len(b.b):
            units = [(1, f) for f in one_factorization_bipartite(g, b)]
        elif all(d % 2 == 0 for d in piece_degrees):
            units = [(2, tf.edges) for tf in two_factorization(g)]
        else:
            raise UnsupportedSplitError(
                "odd piece degree on a non-bipartite graph needs a supplied 1-factorization"
            )
    pieces = []
    pos = 0
    for d in piece_degrees:
        edges: set[int] = set()
        got = 0
        while got < d:
            unit_deg, unit = units[pos]
            pos += 1
            edges |= unit
            got += unit_deg
        pieces.append(edge_subgraph(g, edges))
    return pieces


def _two_factor_via_gadget(g: Graph) -> frozenset[int] | None:
    # Tutte's reduction: a perfect matching of the gadget is a 2-factor of g.
    # Vertex v of degree d gets one port per incident edge and d - 2 cores,
    # each core joined to all of v's ports; matched port pairs are factor edges.
    port: dict[tuple[int, int], int] = {}
    gadget_edges: list[tuple[int, int]] = []
    link: dict[int, int] = {}
    size = 0
    for v in range(g.n):
        if g.degree(v) < 2:
            return None
        for _, e in g.adjacency(v):
            port[(v, e)] = size
            size += 1
    for v in range(g.n):
        ports = [port[(v, e)] for _, e in g.adjacency(v)]
        for _ in range(g.degree(v) - 2):
            core = size
            size += 1
            gadget_edges.extend((p, core) for p in ports)
    for e, (u, v) in g.edges.items():
        link[len(gadget_edges)] = e
        gadget_edges.append((port[(u, e)], port[(v, e)]))
    gadget = build_graph(size, gadget_edges)
    m = find_perfect_matching(gadget)
    if m is None:
        return None
    return frozenset(link[i] for i in m if i in link)


def find_two_factor(g: Graph) -> TwoFactor | None:
    """Some 2-factor of ``g``, or ``None`` if there is none.

    For odd-regular graphs with a perfect matching ``M`` the first 2-factor of
    ``g - M`` is used; otherwise an exact gadget reduction decides.
    """
    r = is_regular(g)
    if r is not None and r >= 2:
        if r % 2 == 0:
            return two_factorization(g)[0]
        m = find_perfect_matching(g)
        if m is not None:
            rest = Graph(g.n, {e: uv for e, uv in g.edges.items() if e not in m})
            return two_factorization(rest)[0]
    edges = _two_factor_via_gadget(g)
    return make_two_factor(g, edges) if edges is not None else None


__all__ = [
    "find_two_factor",
    "Orientation",
    "TwoFactor",
    "eulerian_orientation",
    "make_two_factor",
    "one_factorization_bipartite",
    "one_factorization_general",
    "split_regular_spanning",
    "two_factorization",
]

