"""Pendant assignment along one cycle of a central 2-factor.

Setting: a cycle ``v_0, ..., v_{t-1}`` of a 2-factor ``F`` and an orientation
of ``G - F``.  Each cycle vertex ``v_j`` has out-neighbourhood ``N_j``, which
must be split into ``X_j`` (``k1`` pendants hanging from ``v_j`` in the star on
edge ``v_j v_{j+1}``) and ``Y_{j-1}`` (``k2`` pendants hanging from ``v_j`` in
the star on edge ``v_{j-1} v_j``).  The star on ``v_j v_{j+1}`` is a double-star
exactly when ``X_j`` and ``Y_j`` are disjoint.

Only the ``X_j`` are stored; ``Y_j`` is derived as ``N_{j+1} - X_{j+1}``.  That
keeps every out-edge in exactly one star by construction, so validity reduces
to the disjointness conditions.

A conflict ``w in X_j & Y_j`` is cleared by pushing ``w`` forward: swap it
into ``X_{j+1}`` against some ``x in X_{j+1} - X_j``, and continue while ``w``
now collides with ``Y_{j+1}``.  Such an ``x`` always exists because the two
sets have equal size and ``w`` lies in one but not the other; the chain stops
before coming back round because ``w in X_j`` keeps it out of ``Y_{j-1}``; and
no other conflict is created.  So every initial split can be repaired.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from ..errors import SearchBudgetExceeded
from ..factorize import Orientation
from .types import DoubleStar, Pendant

SEARCH_BUDGET = 1_000_000


@dataclass(frozen=True)
class CycleAssignment:
    """Pendant sets for every star along one cycle.

    ``x[j]`` hangs from ``cycle[j]`` and ``y[j]`` from ``cycle[j+1]`` in the
    star whose central edge joins those two vertices.
    """

    cycle: tuple[int, ...]
    x: tuple[tuple[Pendant, ...], ...]
    y: tuple[tuple[Pendant, ...], ...]

    def stars(self, central_edges: Sequence[int]) -> list[DoubleStar]:
        t = len(self.cycle)
        return [
            DoubleStar(self.cycle[j], self.cycle[(j + 1) % t], central_edges[j], self.x[j], self.y[j])
            for j in range(t)
        ]


class CycleState:
    """Mutable pendant split along one cycle, used by every repair routine."""

    def __init__(self, cycle: Sequence[int], out: list[dict[int, int]], x: list[set[int]]):
        self.cycle = tuple(cycle)
        self.out = out  # out[j]: pendant vertex -> edge index, for v_j
        self.x = x
        self.central_edges: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.cycle)

    def y(self, j: int) -> set[int]:
        nxt = (j + 1) % len(self.cycle)
        return set(self.out[nxt]) - self.x[nxt]

    def conflicts(self) -> list[tuple[int, int]]:
        """``(w, j)`` for each ``w`` on both sides of star ``j``."""
        found = []
        for j in range(len(self.cycle)):
            found.extend((w, j) for w in sorted(self.x[j] & self.y(j)))
        return found

    def swap_into_x(self, p: int, incoming: int, outgoing: int) -> None:
        """Exchange ``incoming`` (currently in ``Y_{p-1}``) with ``outgoing`` (in ``X_p``)."""
        xs = self.x[p]
        assert outgoing in xs and incoming in self.out[p] and incoming not in xs
        xs.remove(outgoing)
        xs.add(incoming)

    def star(self, j: int) -> DoubleStar:
        t = len(self.cycle)
        nxt = (j + 1) % t
        out_j, out_n = self.out[j], self.out[nxt]
        central = self.central_edges[j] if self.central_edges is not None else -1
        return DoubleStar(
            self.cycle[j],
            self.cycle[nxt],
            central,
            tuple((w, out_j[w]) for w in sorted(self.x[j])),
            tuple((w, out_n[w]) for w in sorted(self.y(j))),
        )

    def stars(self) -> list[DoubleStar]:
        return [self.star(j) for j in range(len(self.cycle))]

    def check(self, x_sizes: Callable[[int], int] | None = None, y_size: int | None = None) -> None:
        """Raise ``AssertionError`` unless every star on the cycle is a double-star."""
        t = len(self.cycle)
        for j in range(t):
            if not self.x[j] <= set(self.out[j]):
                raise AssertionError(f"X_{j} is not inside the out-neighbourhood of {self.cycle[j]}")
            clash = self.x[j] & self.y(j)
            if clash:
                raise AssertionError(f"star {j} on cycle {self.cycle} repeats pendants {sorted(clash)}")
            if self.cycle[(j + 1) % t] in self.x[j] or self.cycle[j] in self.y(j):
                raise AssertionError(f"star {j} uses a centre as a pendant")
            if x_sizes is not None and len(self.x[j]) != x_sizes(j):
                raise AssertionError(f"|X_{j}| = {len(self.x[j])}, expected {x_sizes(j)}")
            if y_size is not None and len(self.y(j)) != y_size:
                raise AssertionError(f"|Y_{j}| = {len(self.y(j))}, expected {y_size}")

    def freeze(self) -> CycleAssignment:
        stars = [self.star(j) for j in range(len(self.cycle))]
        return CycleAssignment(self.cycle, tuple(s.x for s in stars), tuple(s.y for s in stars))

    @classmethod
    def from_assignment(cls, a: CycleAssignment, central_edges: Sequence[int] | None = None) -> CycleState:
        t = len(a.cycle)
        out: list[dict[int, int]] = [{} for _ in range(t)]
        for j in range(t):
            out[j].update(a.x[j])
            out[(j + 1) % t].update(a.y[j])
        state = cls(a.cycle, out, [{w for w, _ in a.x[j]} for j in range(t)])
        if central_edges is not None:
            state.central_edges = tuple(central_edges)
        return state


def _greedy_split(out: list[dict[int, int]], k1: int) -> list[set[int]]:
    """Forward pass: keep what the previous star forces, fill with vertices
    that will not force the next one, lowest index first."""
    t = len(out)
    x: list[set[int]] = []
    prev: set[int] = set()
    for j in range(t):
        here, nxt = out[j], out[(j + 1) % t]
        chosen = {w for w in prev if w in here}
        rest = sorted((w for w in here if w not in chosen), key=lambda w: (w in nxt, w))
        chosen.update(rest[: k1 - len(chosen)])
        x.append(chosen)
        prev = chosen
    return x


def push_forward(state: CycleState, w: int, j: int, *, cap: int | None = None) -> int:
    """Clear the conflict ``w in X_j & Y_j`` by pushing ``w`` into later X-sets.

    Returns the number of swaps performed.
    """
    t = len(state)
    cap = cap if cap is not None else t + 1
    p = (j + 1) % t
    steps = 0
    while True:
        prev = (p - 1) % t
        candidates = sorted(state.x[p] - state.x[prev])
        state.swap_into_x(p, w, candidates[0])
        steps += 1
        nxt = (p + 1) % t
        if w in state.out[nxt] and w not in state.x[nxt]:
            if steps >= cap:
                raise SearchBudgetExceeded(f"push chain for {w} did not settle", state.cycle)
            p = nxt
        else:
            return steps


def search_split(
    out: list[dict[int, int]], k1: int, *, budget: int = SEARCH_BUDGET
) -> list[set[int]] | None:
    """Exhaustive backtracking over X-choices with memoised dead ends.

    Position ``j`` only depends on what ``X_{j-1}`` forces into it, so a failed
    ``(j, forced)`` pair never needs revisiting for the same ``X_0``.
    """
    t = len(out)
    neigh = [sorted(o) for o in out]
    nodes = 0

    for x0 in combinations(neigh[0], k1):
        x0set = set(x0)
        dead: set[tuple[int, frozenset[int]]] = set()
        chosen = [x0set]

        def rec(j: int) -> bool:
            nonlocal nodes
            prev = chosen[-1]
            if j == t:
                # closing star t-1: X_{t-1} & Y_{t-1} must be empty
                return all((w not in out[0]) or (w in x0set) for w in prev)
            forced = frozenset(w for w in prev if w in out[j])
            if (j, forced) in dead or len(forced) > k1:
                return False
            free = [w for w in neigh[j] if w not in forced]
            for extra in combinations(free, k1 - len(forced)):
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded("cycle assignment search budget exhausted", out)
                chosen.append(set(forced) | set(extra))
                if rec(j + 1):
                    return True
                chosen.pop()
            dead.add((j, forced))
            return False

        if rec(1):
            return chosen
    return None


def assign_cycle_pendants(
    orientation: Orientation,
    cycle: Sequence[int],
    k1: int,
    k2: int,
    *,
    budget: int = SEARCH_BUDGET,
) -> CycleAssignment:
    """Split each cycle vertex's out-neighbourhood into its two pendant roles.

    ``orientation`` orients ``G - F``; every vertex of ``cycle`` must have out-
    degree ``k1 + k2``.  Greedy split, then conflict pushes, then (never needed
    in practice) exhaustive search.
    """
    if k1 < 1 or k2 < 1:
        raise ValueError("pendant sizes must be positive")
    out = [dict(orientation.out_neighbors(v)) for v in cycle]
    for v, o in zip(cycle, out):
        if len(o) != k1 + k2:
            raise ValueError(f"vertex {v} has out-degree {len(o)}, expected {k1 + k2}")
    state = CycleState(cycle, out, _greedy_split(out, k1))
    cap = 4 * sum(len(o) for o in out) + 4 * len(cycle)
    try:
        for _ in range(cap):
            found = state.conflicts()
            if not found:
                break
            w, j = found[0]
            push_forward(state, w, j)
        else:
            raise SearchBudgetExceeded("conflict repair did not converge", tuple(cycle))
    except SearchBudgetExceeded:
        x = search_split(out, k1, budget=budget)
        if x is None:
            raise SearchBudgetExceeded("no valid pendant split exists for this cycle", tuple(cycle))
        state = CycleState(cycle, out, x)
    state.check(lambda j: k1, k2)
    return state.freeze()
