"""Size-k double-stars in 2k-regular graphs."""

from __future__ import annotations

from typing import Sequence

from ..errors import BadShapeError, DivisibilityViolatedError, NotEvenRegularError
from ..factorize import Orientation, TwoFactor, eulerian_orientation, split_regular_spanning, two_factorization
from ..graph import Graph, is_regular, remove_edges
from .cycles import CycleState, assign_cycle_pendants
from .types import Decomposition, DoubleStar


def assign_along_factor(
    orientation: Orientation,
    cycles: Sequence[Sequence[int]],
    cycle_edges: Sequence[Sequence[int]],
    k1: int,
    k2: int,
) -> list[CycleState]:
    """Run the pendant assignment on every cycle of a central 2-factor."""
    states = []
    for cycle, edges in zip(cycles, cycle_edges):
        a = assign_cycle_pendants(orientation, cycle, k1, k2)
        states.append(CycleState.from_assignment(a, edges))
    return states


def _even_degree(g: Graph) -> int:
    r = is_regular(g)
    if r is None or r % 2:
        raise NotEvenRegularError("graph is not regular of even degree")
    return r


def decompose_even_regular(
    g: Graph, k1: int, k2: int, factor: TwoFactor | None = None
) -> Decomposition:
    """Decompose a 2k-regular graph into copies of S(k1, k2), k1 + k2 + 1 = k.

    The stars are centred on the edges of one 2-factor; the remaining edges
    are oriented Eulerian and handed out as pendants by their tails.
    """
    r = _even_degree(g)
    k = r // 2
    if k1 < 1 or k2 < 1 or k1 + k2 + 1 != k:
        raise BadShapeError(f"S({k1},{k2}) has size {k1 + k2 + 1}; graph is {r}-regular, needs size {k}")
    if factor is None:
        factor = two_factorization(g)[0]
    orient = eulerian_orientation(remove_edges(g, factor.edges))
    stars: list[DoubleStar] = []
    for state in assign_along_factor(orient, factor.cycles, factor.cycle_edges, k1, k2):
        stars.extend(state.stars())
    return Decomposition(tuple(stars), frozenset({(k1, k2)}), "even")


def decompose_even_divisible(g: Graph, k1: int, k2: int) -> Decomposition:
    """2r-regular graphs with k = k1+k2+1 dividing r: cut into 2k-regular pieces."""
    r2 = _even_degree(g)
    if k1 < 1 or k2 < 1:
        raise BadShapeError(f"shape ({k1}, {k2}) needs both pendant sets non-empty")
    k = k1 + k2 + 1
    r = r2 // 2
    if r % k:
        raise DivisibilityViolatedError(f"star size {k} does not divide {r}")
    stars: list[DoubleStar] = []
    for piece in split_regular_spanning(g, [2 * k] * (r // k)):
        stars.extend(decompose_even_regular(piece, k1, k2).stars)
    return Decomposition(tuple(stars), frozenset({(k1, k2)}), "even-divisible")
