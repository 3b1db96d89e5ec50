"""Double-star decompositions of regular graphs."""

from .decompose import *  # noqa: F401,F403
from .decompose import __all__ as _decompose_all
from .errors import DoubleStarError, GraphError, HypothesisError
from .factorize import (
    Orientation,
    TwoFactor,
    eulerian_orientation,
    find_two_factor,
    one_factorization_bipartite,
    one_factorization_general,
    split_regular_spanning,
    two_factorization,
)
from .graph import Bipartition, Graph, VertexMap, bipartition, build_graph, cartesian_product_k2, is_regular
from .matching import (
    enumerate_perfect_matchings,
    find_perfect_matching,
    find_two_disjoint_perfect_matchings,
    maximum_matching,
)

__version__ = "0.1.0"

__all__ = list(_decompose_all) + [
    "Bipartition",
    "DoubleStarError",
    "Graph",
    "GraphError",
    "HypothesisError",
    "Orientation",
    "TwoFactor",
    "VertexMap",
    "bipartition",
    "build_graph",
    "cartesian_product_k2",
    "enumerate_perfect_matchings",
    "eulerian_orientation",
    "find_perfect_matching",
    "find_two_disjoint_perfect_matchings",
    "find_two_factor",
    "is_regular",
    "maximum_matching",
    "one_factorization_bipartite",
    "one_factorization_general",
    "split_regular_spanning",
    "two_factorization",
]
