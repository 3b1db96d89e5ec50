"""Perfect matchings in general graphs.

Matchings are ``frozenset``s of edge indices.  The maximum-cardinality
kernel is Edmonds' blossom algorithm in its classic O(V^3) contraction form.
"""

from __future__ import annotations

import warnings
from collections import deque
from typing import Iterator

from .graph import Graph

Matching = frozenset

EXHAUSTIVE_THRESHOLD = 12
PAIR_SEARCH_BUDGET = 100_000


class SearchBudgetWarning(UserWarning):
    """A bounded search gave up; a ``None`` result means "not found"."""


def is_matching(g: Graph, m: frozenset[int]) -> bool:
    seen: set[int] = set()
    for e in m:
        if e not in g:
            return False
        u, v = g.endpoints(e)
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_perfect_matching(g: Graph, m: frozenset[int]) -> bool:
    return is_matching(g, m) and 2 * len(m) == g.n


def _blossom_mate(g: Graph) -> list[int]:
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    mate = [-1] * n

    # Greedy start; the augmenting phase finishes the job.
    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    def find_augmenting(root: int) -> int:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            marked = [False] * n
            while True:
                a = base[a]
                marked[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if marked[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return _augment(to, parent)
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    def _augment(v: int, parent: list[int]) -> int:
        end = v
        while v != -1:
            pv = parent[v]
            ppv = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = ppv
        return end

    for root in range(n):
        if mate[root] == -1:
            find_augmenting(root)
    return mate


def maximum_matching(g: Graph) -> frozenset[int]:
    """A maximum-cardinality matching of ``g`` (deterministic)."""
    mate = _blossom_mate(g)
    return frozenset(
        g.edge_index(v, w) for v, w in enumerate(mate) if w != -1 and v < w  # type: ignore[misc]
    )


def find_perfect_matching(g: Graph) -> frozenset[int] | None:
    if g.n % 2:
        return None
    m = maximum_matching(g)
    return m if 2 * len(m) == g.n else None


def iter_perfect_matchings(g: Graph) -> Iterator[frozenset[int]]:
    """All perfect matchings, branching on the lowest unmatched vertex.

    Neighbours are tried in ascending order, so the sequence is deterministic.
    """
    n = g.n
    if n % 2:
        return
    matched = [False] * n
    chosen: list[int] = []

    def rec(start: int) -> Iterator[frozenset[int]]:
        v = start
        while v < n and matched[v]:
            v += 1
        if v == n:
            yield frozenset(chosen)
            return
        matched[v] = True
        for w, e in g.adjacency(v):
            if not matched[w]:
                matched[w] = True
                chosen.append(e)
                yield from rec(v + 1)
                chosen.pop()
                matched[w] = False
        matched[v] = False

    yield from rec(0)


def enumerate_perfect_matchings(g: Graph, limit: int) -> list[frozenset[int]]:
    if limit < 1:
        raise ValueError("limit must be at least 1")
    out = []
    for m in iter_perfect_matchings(g):
        out.append(m)
        if len(out) >= limit:
            break
    return out


def _without(g: Graph, m: frozenset[int]) -> Graph:
    return Graph(g.n, {e: uv for e, uv in g.edges.items() if e not in m})


def find_two_disjoint_perfect_matchings(
    g: Graph,
    *,
    exhaustive_threshold: int = EXHAUSTIVE_THRESHOLD,
    budget: int = PAIR_SEARCH_BUDGET,
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two edge-disjoint perfect matchings ``(M1, M2)``, or ``None``.

    Up to ``exhaustive_threshold`` vertices every perfect matching is tried as
    ``M1`` and ``None`` is a proof of non-existence.  Above it, the blossom
    matching is tried first and then enumerated alternatives until ``budget``
    candidates have been checked; exhausting the budget emits a
    :class:`SearchBudgetWarning` and ``None`` only means "not found".
    """
    if g.n % 2:
        return None
    exhaustive = g.n <= exhaustive_threshold

    def attempt(m1: frozenset[int]):
        m2 = find_perfect_matching(_without(g, m1))
        return (m1, m2) if m2 is not None else None

    if not exhaustive:
        first = find_perfect_matching(g)
        if first is None:
            return None
        found = attempt(first)
        if found:
            return found
    checked = 0
    for m1 in iter_perfect_matchings(g):
        if not exhaustive:
            checked += 1
            if checked > budget:
                warnings.warn(
                    f"disjoint perfect matching search gave up after {budget} candidates",
                    SearchBudgetWarning,
                    stacklevel=2,
                )
                return None
        found = attempt(m1)
        if found:
            return found
    return None
