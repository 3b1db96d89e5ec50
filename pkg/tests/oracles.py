"""Independent reference implementations used only by the tests.

Nothing here imports the algorithms under test; inputs are plain edge lists
so a bug shared with the library is unlikely.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations


def brute_perfect_matchings(n: int, edges: list[tuple[int, int]]) -> list[frozenset[int]]:
    """All perfect matchings, by trying every set of n/2 edge positions."""
    if n % 2:
        return []
    found = []
    for combo in combinations(range(len(edges)), n // 2):
        seen = set()
        ok = True
        for i in combo:
            u, v = edges[i]
            if u in seen or v in seen:
                ok = False
                break
            seen.update((u, v))
        if ok:
            found.append(frozenset(combo))
    return found


def has_perfect_matching_brute(n: int, edges: list[tuple[int, int]]) -> bool:
    """Existence by recursion on the lowest uncovered vertex (exponential)."""
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def rec(free: frozenset[int]) -> bool:
        if not free:
            return True
        v = min(free)
        return any(w in free and rec(free - {v, w}) for w in adj[v])

    return n % 2 == 0 and rec(frozenset(range(n)))


def naive_certificate_ok(n: int, edges: list[tuple[int, int]], cert: dict) -> bool:
    """Re-check a certificate dict from scratch: every file edge is used once,
    each star is a double-star of an allowed shape, and indices are sane."""
    try:
        shapes = {tuple(sorted(s)) for s in cert["shapes"]}
        used: list[int] = []
        for st in cert["stars"]:
            c1, c2, central = st["u1"], st["u2"], st["central"]
            if not (0 <= central < len(edges)) or set(edges[central]) != {c1, c2} or c1 == c2:
                return False
            used.append(central)
            verts = [c1, c2]
            for centre, side in ((c1, st["X"]), (c2, st["Y"])):
                for p, e in side:
                    if not (0 <= e < len(edges)) or set(edges[e]) != {centre, p}:
                        return False
                    used.append(e)
                    verts.append(p)
            if len(set(verts)) != len(verts):
                return False
            if tuple(sorted((len(st["X"]), len(st["Y"])))) not in shapes:
                return False
        return Counter(used) == Counter(range(len(edges)))
    except (KeyError, TypeError, ValueError):
        return False


def exhaustive_decomposition(
    n: int, edges: list[tuple[int, int]], shape_multiset: Counter, budget: int = 2_000_000
) -> bool | None:
    """Is there a decomposition whose stars have exactly ``shape_multiset``
    (shapes as sorted pairs)?  ``None`` when the node budget runs out.

    The lowest uncovered edge must lie in some star; every double-star through
    it that uses only uncovered edges and an available shape is tried.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    full = (1 << len(edges)) - 1
    nodes = 0
    dead: set[tuple[int, tuple]] = set()

    def stars_through(e: int, used: int, shapes: Counter):
        a0, b0 = edges[e]
        centrals = {e}
        for x in (a0, b0):
            centrals.update(i for _, i in adj[x] if not used >> i & 1)
        for c in sorted(centrals):
            a, b = edges[c]
            na = [(w, i) for w, i in adj[a] if w != b and not used >> i & 1]
            nb = [(w, i) for w, i in adj[b] if w != a and not used >> i & 1]
            for s, t in shapes:
                if shapes[(s, t)] == 0:
                    continue
                for p, q in {(s, t), (t, s)}:
                    for xs in combinations(na, p):
                        xv = {w for w, _ in xs}
                        for ys in combinations(nb, q):
                            if xv & {w for w, _ in ys}:
                                continue
                            mask = 1 << c
                            for _, i in xs + ys:
                                mask |= 1 << i
                            if mask >> e & 1:
                                yield mask, (s, t)

    def rec(used: int, shapes: Counter) -> bool:
        nonlocal nodes
        if used == full:
            return sum(shapes.values()) == 0
        key = (used, tuple(sorted(shapes.items())))
        if key in dead:
            return False
        e = ((~used) & full & -((~used) & full)).bit_length() - 1
        for mask, shape in stars_through(e, used, shapes):
            nodes += 1
            if nodes > budget:
                raise TimeoutError
            shapes[shape] -= 1
            ok = rec(used | mask, shapes)
            shapes[shape] += 1
            if ok:
                return True
        dead.add(key)
        return False

    try:
        return rec(0, Counter({tuple(sorted(k)): v for k, v in shape_multiset.items()}))
    except TimeoutError:
        return None
