"""Double-star decompositions of (2k+1)-regular graphs.

Three routes:

* any 2-factor: lift to ``H = G x K2``, decompose ``H`` with central edges on
  both copies of the 2-factor, restrict to the first copy (four shapes);
* two disjoint perfect matchings ``M1, M2``: the same lift with ``M1 + M2`` as
  central 2-factor, plus pendant swaps so that every rung kept by a
  first-copy star sits on its size-``k1`` side (two shapes);
* a perfect matching ``M`` with a common-neighbour bound: decompose ``G - M``
  and hang each edge of ``M`` on a size-``k1`` side (two shapes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..errors import (
    BadShapeError,
    CommonNeighborBoundViolatedError,
    DivisibilityViolatedError,
    InvalidFactorizationError,
    MatchingsNotDisjointPerfectError,
    No2FactorFoundError,
    NoPerfectMatchingError,
    NotOddRegularError,
    NotPerfectMatchingError,
    NotTriangleFreeError,
    RepairLoopExceeded,
)
from ..factorize import (
    Orientation,
    TwoFactor,
    eulerian_orientation,
    find_two_factor,
    make_two_factor,
    one_factorization_general,
    two_factorization,
)
from ..graph import Graph, cartesian_product_k2, common_neighbors, edge_subgraph, is_regular, is_triangle_free, remove_edges
from ..matching import find_perfect_matching, is_perfect_matching
from .cycles import CycleState
from .even import assign_along_factor
from .types import Decomposition, DoubleStar

Checkpoint = Callable[[str, "LiftedDecomposition"], None]


def _odd_degree(g: Graph) -> int:
    r = is_regular(g)
    if r is None or r % 2 == 0:
        raise NotOddRegularError("graph is not regular of odd degree")
    return r


def _check_positive(k1: int, k2: int) -> None:
    if k1 < 1 or k2 < 1:
        raise BadShapeError(f"shape ({k1}, {k2}) needs both pendant sets non-empty")


# -- the lifted graph G x K2 ----------------------------------------------------------


@dataclass
class LiftedDecomposition:
    """Working state for a decomposition of ``H = G x K2``.

    Vertices ``0..n-1`` are the first copy, ``n..2n-1`` the second; rung
    ``{i, n+i}`` has edge index ``2m + i`` in ``h``.  ``states`` holds one
    :class:`CycleState` per cycle of the central 2-factor, first-copy cycles
    first (``copy1`` of them).
    """

    g: Graph
    h: Graph
    states: list[CycleState]
    copy1: int

    @property
    def n(self) -> int:
        return self.g.n

    def is_rung_vertex(self, w: int) -> bool:
        return w >= self.g.n

    def first_copy_states(self) -> list[CycleState]:
        return self.states[: self.copy1]

    def rungs_in_star(self, state: CycleState, j: int) -> tuple[list[int], list[int]]:
        """Rung pendants of star ``j`` on the X-side and on the Y-side."""
        return (
            [w for w in state.x[j] if self.is_rung_vertex(w)],
            [w for w in state.y(j) if self.is_rung_vertex(w)],
        )

    def restrict(self) -> list[DoubleStar]:
        """First-copy stars with rung pendants removed, in ``g``'s labels."""
        order = self.g.edge_ids()
        stars = []
        for state in self.first_copy_states():
            for star in state.stars():
                star = star.drop_pendants(self.is_rung_vertex)
                stars.append(star.relabel(lambda v: v, lambda e: order[e]))
        return stars

    def h_stars(self) -> list[DoubleStar]:
        return [s for state in self.states for s in state.stars()]


def _lift(g: Graph, factor: TwoFactor, orientation_of: Callable[[Graph, set[int]], Orientation], k1: int, k2: int) -> LiftedDecomposition:
    n, m = g.n, g.m
    h, _ = cartesian_product_k2(g)
    pos = {e: i for i, e in enumerate(g.edge_ids())}
    cycles = [c for c in factor.cycles] + [tuple(v + n for v in c) for c in factor.cycles]
    cycle_edges = [tuple(pos[e] for e in ce) for ce in factor.cycle_edges] + [
        tuple(m + pos[e] for e in ce) for ce in factor.cycle_edges
    ]
    central = {e for ce in cycle_edges for e in ce}
    orient = orientation_of(h, central)
    states = assign_along_factor(orient, cycles, cycle_edges, k1, k2)
    return LiftedDecomposition(g, h, states, len(factor.cycles))


def decompose_odd_four_shapes(g: Graph, k1: int, k2: int, factor: TwoFactor | None = None) -> Decomposition:
    """A (2k+1)-regular graph with a 2-factor, k1 + k2 = k, decomposes into
    S(k1,k2), S(k1-1,k2), S(k1,k2-1) and S(k1-1,k2-1)."""
    r = _odd_degree(g)
    _check_positive(k1, k2)
    k = (r - 1) // 2
    if k1 + k2 != k:
        raise BadShapeError(f"k1 + k2 must equal {k} for a {r}-regular graph")
    if factor is None:
        factor = find_two_factor(g)
        if factor is None:
            raise No2FactorFoundError("graph has no 2-factor")
    lifted = _lift(g, factor, lambda h, central: eulerian_orientation(remove_edges(h, central)), k1, k2)
    shapes = {(k1, k2), (k1 - 1, k2), (k1, k2 - 1), (k1 - 1, k2 - 1)}
    return Decomposition(tuple(lifted.restrict()), frozenset(shapes), "four-shape")


# -- two disjoint perfect matchings ------------------------------------------------------


def _two_matchings_orientation(g: Graph, m1: frozenset[int], m2: frozenset[int]):
    """Orientation of ``H - F`` for the two-matchings construction.

    ``G - M1`` is oriented Eulerian.  On the first copy the remaining edges
    keep that direction, on the second copy they are reversed.  The rung at
    ``v`` leaves the first copy exactly when ``v`` is the tail of its
    ``M2``-edge, which makes ``H - F`` Eulerian.  Returns the orientation
    builder and the set of vertices whose rung leaves the first copy.
    """
    base = eulerian_orientation(remove_edges(g, m1))
    ids = g.edge_ids()
    n, m = g.n, g.m
    rung_out = {base.tail(e) for e in m2}

    def build(h: Graph, central: set[int]) -> Orientation:
        forward: dict[int, bool] = {}
        for i, e in enumerate(ids):
            if e in m1 or e in m2:
                continue
            forward[i] = base.forward[e]
            forward[m + i] = not base.forward[e]
        for v in range(n):
            # rung (v, n+v): forward means v -> n+v
            forward[2 * m + v] = v in rung_out
        orient = Orientation(remove_edges(h, central), forward)
        assert orient.is_eulerian()
        return orient

    return build, rung_out


def rungs_apart(lifted: LiftedDecomposition) -> bool:
    """No first-copy star carries two rung pendants."""
    for state in lifted.first_copy_states():
        for j in range(len(state)):
            xs, ys = lifted.rungs_in_star(state, j)
            if len(xs) + len(ys) > 1:
                return False
    return True


def rungs_on_x_sides(lifted: LiftedDecomposition) -> bool:
    """Every rung pendant of a first-copy star hangs from its size-k1 side."""
    for state in lifted.first_copy_states():
        for j in range(len(state)):
            if lifted.rungs_in_star(state, j)[1]:
                return False
    return rungs_apart(lifted)


def _cap(lifted: LiftedDecomposition) -> int:
    return 4 * lifted.h.m


def _checked(state: CycleState, check: bool, k1: int, k2: int) -> None:
    if check:
        state.check(lambda j: k1, k2)


def separate_rungs(lifted: LiftedDecomposition, k1: int, k2: int, *, check_swaps: bool = False) -> int:
    """Move the second rung out of every first-copy star that holds two.

    Star ``i`` holding rungs ``v'_i`` (X-side) and ``v'_{i+1}`` (Y-side)
    trades ``v'_{i+1}`` for the lowest ``t in X_{i+1} - X_i``.
    """
    swaps = 0
    cap = _cap(lifted)
    for state in lifted.first_copy_states():
        t = len(state)
        changed = True
        while changed:
            changed = False
            for i in range(t):
                xs, ys = lifted.rungs_in_star(state, i)
                if xs and ys:
                    nxt = (i + 1) % t
                    moving = ys[0]
                    t_out = min(state.x[nxt] - state.x[i])
                    state.swap_into_x(nxt, moving, t_out)
                    _checked(state, check_swaps, k1, k2)
                    swaps += 1
                    changed = True
                    if swaps > cap:
                        raise RepairLoopExceeded("rung separation did not terminate")
    return swaps


def _rotate_back(state: CycleState, lifted: LiftedDecomposition, i: int, x: int,
                 check: bool, k1: int, k2: int) -> int:
    """Shift ``x`` out of ``X_i, X_{i-1}, ...`` until it no longer collides.

    At each position ``j`` the replacement comes from ``Y_{j-1} - Y_j``, the
    rung at ``v_j`` whenever it is available.  Rungs therefore only ever move
    onto X-sides.  If the shift wraps all the way round, its last step lands
    on ``v_{i+1}`` and lifts exactly the rung being fixed.
    """
    t = len(state)
    j = i
    steps = 0
    while True:
        options = sorted(set(state.out[j]) - state.x[j] - state.y(j))
        rung = state.cycle[j] + lifted.n
        y = rung if rung in options else options[0]
        state.swap_into_x(j, y, x)
        steps += 1
        prev = (j - 1) % t
        if x in state.x[prev]:
            j = prev
            if steps > t:
                raise RepairLoopExceeded("rotation wrapped more than once round the cycle")
        else:
            # x sits in both X_{j-1} and Y_{j-1} until the shift stops
            _checked(state, check, k1, k2)
            return steps


def lift_rungs(lifted: LiftedDecomposition, k1: int, k2: int, *, check_swaps: bool = False) -> int:
    """Move every first-copy rung from a Y-side onto the matching X-side.

    With ``v'_{i+1} in Y_i``: if ``X_{i+1}`` differs from ``X_i`` swap the rung
    against some ``x in X_{i+1} - X_i``; otherwise first rotate an ``x in X_i``
    backwards round the cycle until ``X_i`` and ``X_{i+1}`` differ.
    """
    swaps = 0
    cap = _cap(lifted)
    for state in lifted.first_copy_states():
        t = len(state)
        while True:
            pending = [
                i for i in range(t) if (state.cycle[(i + 1) % t] + lifted.n) in state.y(i)
            ]
            if not pending:
                break
            i = pending[0]
            p = (i + 1) % t
            rung = state.cycle[p] + lifted.n
            if state.x[p] == state.x[i]:
                swaps += _rotate_back(state, lifted, i, min(state.x[i]), check_swaps, k1, k2)
            if rung in state.y(i):
                x = min(state.x[p] - state.x[i])
                state.swap_into_x(p, rung, x)
                _checked(state, check_swaps, k1, k2)
                swaps += 1
            if swaps > cap:
                raise RepairLoopExceeded("rung lifting did not terminate")
    return swaps


def _check_matchings(g: Graph, m1: frozenset[int], m2: frozenset[int]) -> None:
    if not (is_perfect_matching(g, m1) and is_perfect_matching(g, m2)) or (m1 & m2):
        raise MatchingsNotDisjointPerfectError("M1 and M2 must be disjoint perfect matchings")


def decompose_odd_two_matchings(
    g: Graph,
    m1: Sequence[int],
    m2: Sequence[int],
    k1: int,
    k2: int,
    *,
    check_swaps: bool = False,
    on_checkpoint: Checkpoint | None = None,
) -> Decomposition:
    """A (2k+1)-regular graph with disjoint perfect matchings ``m1, m2``
    decomposes into S(k1,k2) and S(k1-1,k2) for every k1 + k2 = k, k1, k2 >= 1.

    ``on_checkpoint(stage, lifted)`` is called after the initial assignment
    (``"assigned"``) and after each repair (``"separated"``, ``"lifted"``).
    """
    r = _odd_degree(g)
    m1, m2 = frozenset(m1), frozenset(m2)
    _check_matchings(g, m1, m2)
    _check_positive(k1, k2)
    k = (r - 1) // 2
    if k1 + k2 != k:
        raise BadShapeError(f"k1 + k2 must equal {k} for a {r}-regular graph")
    build, _ = _two_matchings_orientation(g, m1, m2)
    factor = make_two_factor(g, m1 | m2)
    lifted = _lift(g, factor, build, k1, k2)
    if on_checkpoint:
        on_checkpoint("assigned", lifted)
    separate_rungs(lifted, k1, k2, check_swaps=check_swaps)
    if not rungs_apart(lifted):
        raise RepairLoopExceeded("rung separation failed after repair")
    if on_checkpoint:
        on_checkpoint("separated", lifted)
    lift_rungs(lifted, k1, k2, check_swaps=check_swaps)
    if not rungs_on_x_sides(lifted):
        raise RepairLoopExceeded("rung lifting failed after repair")
    if on_checkpoint:
        on_checkpoint("lifted", lifted)
    shapes = {(k1, k2), (k1 - 1, k2)}
    return Decomposition(tuple(lifted.restrict()), frozenset(shapes), "two-matchings")


def decompose_odd_one_factorable(
    g: Graph,
    factors: Sequence[Sequence[int]] | None,
    k1: int,
    k2: int,
    *,
    piece_degree: int | None = None,
) -> Decomposition:
    """Cut a 1-factorable (2k+1)-regular graph into r-regular pieces,
    r = 2(k1+k2)+1 dividing 2k+1, and decompose each with its first two
    1-factors as the disjoint perfect matchings."""
    d = _odd_degree(g)
    _check_positive(k1, k2)
    r = 2 * (k1 + k2) + 1
    if piece_degree is not None and piece_degree != r:
        if piece_degree % 2 == 0 or d % piece_degree:
            raise DivisibilityViolatedError(f"piece degree {piece_degree} must be odd and divide {d}")
        raise BadShapeError(f"piece degree {piece_degree} needs k1 + k2 = {(piece_degree - 1) // 2}")
    if d % r:
        raise DivisibilityViolatedError(f"piece degree {r} does not divide {d}")
    if factors is None:
        found = one_factorization_general(g)
        if found is None:
            raise InvalidFactorizationError("no 1-factorization found")
    else:
        found = one_factorization_general(g, supplied=[frozenset(f) for f in factors])
    stars: list[DoubleStar] = []
    for start in range(0, d, r):
        bundle = found[start : start + r]
        piece = edge_subgraph(g, frozenset().union(*bundle))
        stars.extend(decompose_odd_two_matchings(piece, bundle[0], bundle[1], k1, k2).stars)
    return Decomposition(tuple(stars), frozenset({(k1, k2), (k1 - 1, k2)}), "one-factorable")


# -- one perfect matching plus a common-neighbour bound ---------------------------------


def decompose_odd_common_neighbor(
    g: Graph,
    m: Sequence[int],
    k1: int,
    k2: int,
    *,
    check_swaps: bool = False,
    factor: TwoFactor | None = None,
) -> Decomposition:
    """S(k1,k2) and S(k1+1,k2), k1 + k2 = k - 1, for a (2k+1)-regular graph
    with perfect matching ``m`` whose central 2-factor ``F`` (of ``g - m``)
    satisfies ``|N(u) & N(v)| <= k1 - 1`` on every edge ``uv`` of ``F``."""
    r = _odd_degree(g)
    m = frozenset(m)
    if not is_perfect_matching(g, m):
        raise NotPerfectMatchingError("m is not a perfect matching")
    _check_positive(k1, k2)
    k = (r - 1) // 2
    if k1 + k2 != k - 1:
        raise BadShapeError(f"k1 + k2 must equal {k - 1} for a {r}-regular graph")
    rest = remove_edges(g, m)
    if factor is None:
        factor = two_factorization(rest)[0]
    for e in sorted(factor.edges):
        u, v = g.endpoints(e)
        common = len(common_neighbors(g, u, v))
        if common > k1 - 1:
            raise CommonNeighborBoundViolatedError(u, v, common, k1 - 1)
    orient = eulerian_orientation(remove_edges(rest, factor.edges))
    states = assign_along_factor(orient, factor.cycles, factor.cycle_edges, k1, k2)
    where = {v: (s, j) for s in states for j, v in enumerate(s.cycle)}
    cap = 4 * g.m
    for e in sorted(m):
        u, v = g.endpoints(e)
        state, j0 = where[u]
        _attach(state, j0, v, e, cap)
        if check_swaps:
            state.check()
    stars = [s for state in states for s in state.stars()]
    return Decomposition(tuple(stars), frozenset({(k1, k2), (k1 + 1, k2)}), "common-neighbor")


def _attach(state: CycleState, j0: int, v: int, e: int, cap: int) -> None:
    """Hang matching edge ``e = (cycle[j0], v)`` on the X-side at ``j0``.

    If ``v`` already sits in ``Y_{j0}`` it is first pushed forward: swapped
    into ``X_{j0+1}`` against some ``x in X_{j0+1} - X_{j0}``, and again while
    it still collides.  The chain ends before returning to ``j0`` because
    ``v`` is not an out-neighbour of ``cycle[j0]`` in ``G - M``.
    """
    t = len(state)
    p = (j0 + 1) % t
    steps = 0
    while v in state.y((p - 1) % t):
        candidates = sorted(state.x[p] - state.x[(p - 1) % t])
        if not candidates:
            a, b = state.cycle[(p - 1) % t], state.cycle[p]
            raise CommonNeighborBoundViolatedError(a, b, len(state.x[p]), len(state.x[p]) - 1)
        state.swap_into_x(p, v, candidates[0])
        steps += 1
        if steps > cap:
            raise RepairLoopExceeded("matching-edge push did not terminate")
        p = (p + 1) % t
    state.out[j0][v] = e
    state.x[j0].add(v)


def decompose_odd_triangle_free(g: Graph, k1: int, k2: int) -> Decomposition:
    if not is_triangle_free(g):
        raise NotTriangleFreeError("graph contains a triangle")
    _odd_degree(g)
    m = find_perfect_matching(g)
    if m is None:
        raise NoPerfectMatchingError("graph has no perfect matching")
    d = decompose_odd_common_neighbor(g, m, k1, k2)
    return Decomposition(d.stars, d.allowed_shapes, "triangle-free")
