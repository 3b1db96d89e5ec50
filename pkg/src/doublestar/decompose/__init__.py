"""Constructions of double-star decompositions and their verifier."""

from .bipartite import (
    decompose_bipartite_degree_divisible,
    decompose_bipartite_divisible,
    decompose_bipartite_two_sizes,
    decompose_regular_bipartite,
    split_vertices,
)
from .cycles import CycleAssignment, CycleState, assign_cycle_pendants
from .even import decompose_even_divisible, decompose_even_regular
from .odd import (
    LiftedDecomposition,
    rungs_apart,
    rungs_on_x_sides,
    decompose_odd_common_neighbor,
    decompose_odd_four_shapes,
    decompose_odd_one_factorable,
    decompose_odd_triangle_free,
    decompose_odd_two_matchings,
)
from .types import Decomposition, DoubleStar, normalize_shape
from .verify import VerificationReport, Violation, verify_decomposition

__all__ = [
    "CycleAssignment",
    "CycleState",
    "Decomposition",
    "DoubleStar",
    "LiftedDecomposition",
    "VerificationReport",
    "Violation",
    "assign_cycle_pendants",
    "rungs_apart",
    "rungs_on_x_sides",
    "decompose_bipartite_degree_divisible",
    "decompose_bipartite_divisible",
    "decompose_bipartite_two_sizes",
    "decompose_even_divisible",
    "decompose_even_regular",
    "decompose_odd_common_neighbor",
    "decompose_odd_four_shapes",
    "decompose_odd_one_factorable",
    "decompose_odd_triangle_free",
    "decompose_odd_two_matchings",
    "decompose_regular_bipartite",
    "normalize_shape",
    "split_vertices",
    "verify_decomposition",
]
