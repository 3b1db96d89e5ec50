"""Seeded graph families.

Every random generator draws from ``random.Random(seed)`` (Mersenne Twister)
and consumes it in a fixed order, so equal parameters and seed give an
identical edge list on every run and platform.  Edge lists come out sorted.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BadOffsetsError, GenerationError, GenerationFailed, ParityViolatedError
from .graph import SIDE_A, SIDE_B, Bipartition, Graph, build_graph
from .matching import find_perfect_matching

RESTART_CAP = 1000


def _sorted_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return build_graph(n, sorted((min(u, v), max(u, v)) for u, v in edges))


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GenerationError("a cycle needs at least 3 vertices")
    return _sorted_graph(n, [(i, (i + 1) % n) for i in range(n)])


def circulant(n: int, offsets: Sequence[int]) -> Graph:
    """Vertex ``i`` joined to ``i +- s (mod n)`` for each offset ``s``."""
    offsets = list(offsets)
    if len(set(offsets)) != len(offsets) or any(not 1 <= s <= n // 2 for s in offsets):
        raise BadOffsetsError(f"offsets {offsets} must be distinct and lie in [1, {n // 2}]")
    edges = {(min(i, (i + s) % n), max(i, (i + s) % n)) for i in range(n) for s in offsets}
    return _sorted_graph(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _sorted_graph(10, outer + spokes + inner)


def random_regular(n: int, r: int, seed: int) -> Graph:
    """Pairing model: stubs are matched one random pair at a time.

    A pair that would make a loop or a repeated edge is redrawn; when no
    acceptable pair is left the attempt restarts (at most ``RESTART_CAP``).
    """
    if (n * r) % 2:
        raise ParityViolatedError(f"n*r = {n * r} is odd")
    if r < 0 or (n > 0 and r >= n):
        raise GenerationError(f"need 0 <= r < n, got r={r}, n={n}")
    rng = random.Random(seed)
    for _ in range(RESTART_CAP):
        edges = _try_pairing(n, r, rng)
        if edges is not None:
            return _sorted_graph(n, edges)
    raise GenerationFailed(f"no simple {r}-regular graph on {n} vertices after {RESTART_CAP} attempts")


def _try_pairing(n: int, r: int, rng: random.Random) -> set[tuple[int, int]] | None:
    stubs = [v for v in range(n) for _ in range(r)]
    edges: set[tuple[int, int]] = set()
    while stubs:
        for _ in range(50):
            i, j = rng.randrange(len(stubs)), rng.randrange(len(stubs))
            u, v = stubs[i], stubs[j]
            if u != v and (min(u, v), max(u, v)) not in edges:
                break
        else:
            ok = [
                (i, j)
                for i, j in combinations(range(len(stubs)), 2)
                if stubs[i] != stubs[j] and (min(stubs[i], stubs[j]), max(stubs[i], stubs[j])) not in edges
            ]
            if not ok:
                return None
            i, j = ok[rng.randrange(len(ok))]
            u, v = stubs[i], stubs[j]
        edges.add((min(u, v), max(u, v)))
        for k in sorted((i, j), reverse=True):
            stubs[k] = stubs[-1]
            stubs.pop()
    return edges


def _random_perfect_matching(g: Graph, rng: random.Random) -> list[tuple[int, int]] | None:
    """A perfect matching of ``g`` found after a random relabelling."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    shuffled = build_graph(g.n, sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edge_list()))
    m = find_perfect_matching(shuffled)
    if m is None:
        return None
    inv = {p: v for v, p in enumerate(perm)}
    return [(inv[a], inv[b]) for a, b in (shuffled.endpoints(e) for e in m)]


def _layered_matchings(base: Graph, r: int, rng: random.Random) -> list[list[tuple[int, int]]] | None:
    """``r`` pairwise disjoint random perfect matchings of ``base``."""
    used: set[tuple[int, int]] = set()
    layers = []
    for _ in range(r):
        rest = Graph(base.n, {e: uv for e, uv in base.edges.items() if uv not in used})
        m = _random_perfect_matching(rest, rng)
        if m is None:
            return None
        m = [(min(u, v), max(u, v)) for u, v in m]
        used.update(m)
        layers.append(m)
    return layers


def random_regular_bipartite(m: int, r: int, seed: int) -> tuple[Graph, Bipartition]:
    """Union of ``r`` random disjoint perfect matchings between ``0..m-1`` and ``m..2m-1``.

    Each matching is drawn in the bipartite complement of the earlier ones,
    which stays regular and therefore always has one.
    """
    if not 0 <= r <= m:
        raise GenerationError(f"need 0 <= r <= m, got r={r}, m={m}")
    rng = random.Random(seed)
    layers = _layered_matchings(complete_bipartite(m, m), r, rng)
    if layers is None:  # pragma: no cover - Hall's theorem rules this out
        raise GenerationFailed("bipartite complement without a perfect matching")
    g = _sorted_graph(2 * m, [uv for layer in layers for uv in layer])
    return g, Bipartition(tuple([SIDE_A] * m + [SIDE_B] * m))


def random_one_factorable(n: int, r: int, seed: int) -> tuple[Graph, list[frozenset[int]]]:
    """An r-regular graph on ``n`` vertices built as ``r`` disjoint random
    perfect matchings of ``K_n``, with those matchings as edge-index sets."""
    if n % 2:
        raise ParityViolatedError("a perfect matching needs an even vertex count")
    if not 0 <= r < n:
        raise GenerationError(f"need 0 <= r < n, got r={r}, n={n}")
    rng = random.Random(seed)
    for _ in range(RESTART_CAP):
        layers = _layered_matchings(complete_graph(n), r, rng)
        if layers is not None:
            break
    else:
        raise GenerationFailed(f"could not stack {r} disjoint perfect matchings in K_{n}")
    g = _sorted_graph(n, [uv for layer in layers for uv in layer])
    return g, [frozenset(g.edge_index(u, v) for u, v in layer) for layer in layers]


def glue_same_side(g: Graph, b: Bipartition, groups: Sequence[Sequence[int]]) -> tuple[Graph, Bipartition]:
    """Identify each group of same-side vertices with pairwise disjoint
    neighbourhoods into one vertex; new ids follow the order of ``groups``."""
    new_id = {}
    for i, grp in enumerate(groups):
        for v in grp:
            new_id[v] = i
    if sorted(new_id) != list(range(g.n)):
        raise GenerationError("groups must partition the vertex set")
    sides = []
    for grp in groups:
        if len({b.side[v] for v in grp}) != 1:
            raise GenerationError("cannot glue vertices from different sides")
        sides.append(b.side[grp[0]])
    edges = {(min(new_id[u], new_id[v]), max(new_id[u], new_id[v])) for u, v in g.edge_list()}
    if len(edges) != g.m:
        raise GenerationError("glued vertices share a neighbour")
    return _sorted_graph(len(groups), edges), Bipartition(tuple(sides))


def random_degree_multiple_bipartite(m: int, r: int, seed: int, max_multiple: int = 3) -> tuple[Graph, Bipartition]:
    """Bipartite graph with every degree in ``{r, 2r, ..., max_multiple*r}``.

    Starts from a random r-regular bipartite graph and glues random runs of
    same-side vertices whose neighbourhoods are pairwise disjoint.
    """
    g, b = random_regular_bipartite(m, r, seed)
    rng = random.Random(seed + 1)
    for side in (SIDE_A, SIDE_B):
        groups: list[list[int]] = [[v] for v in range(g.n) if b.side[v] != side]
        pool = [v for v in range(g.n) if b.side[v] == side]
        rng.shuffle(pool)
        while pool:
            want = rng.randint(1, max_multiple)
            grp = [pool.pop()]
            seen = set(g.neighbors(grp[0]))
            for v in list(pool):
                if len(grp) == want:
                    break
                if seen.isdisjoint(g.neighbors(v)):
                    grp.append(v)
                    seen.update(g.neighbors(v))
                    pool.remove(v)
            groups.append(sorted(grp))
        groups.sort()
        g, b = glue_same_side(g, b, groups)
    return g, b


FAMILIES = ("complete", "complete-bipartite", "cycle", "circulant", "petersen", "random-regular", "random-regular-bipartite")

__all__ = [
    "FAMILIES",
    "circulant",
    "complete_bipartite",
    "complete_graph",
    "cycle",
    "glue_same_side",
    "petersen",
    "random_degree_multiple_bipartite",
    "random_one_factorable",
    "random_regular",
    "random_regular_bipartite",
]
