"""Exception hierarchy.

Everything raised on purpose by this package derives from
:class:`DoubleStarError`.  Errors that mean "this input does not satisfy the
hypotheses of the requested construction" derive from
:class:`HypothesisError`; the CLI maps those to exit status 2.
"""

from __future__ import annotations


class DoubleStarError(Exception):
    """Base class for all package errors."""


# -- graph construction -------------------------------------------------------


class GraphError(DoubleStarError, ValueError):
    """Malformed graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


class UnknownEdgeIndexError(GraphError, KeyError):
    pass


class GraphFormatError(GraphError):
    """Edge-list or certificate file does not parse."""


# -- hypothesis failures ---------------------------------------------------------


class HypothesisError(DoubleStarError):
    """The graph (or supplied data) does not meet a construction's hypotheses."""


class NotRegularError(HypothesisError):
    pass


class NotBipartiteError(HypothesisError):
    pass


class NotEvenRegularError(HypothesisError):
    pass


class NotOddRegularError(HypothesisError):
    pass


class OddDegreeVertexError(HypothesisError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has odd degree")
        self.vertex = vertex


class DegreeNotDivisibleError(HypothesisError):
    def __init__(self, vertex: int, degree: int, r: int):
        super().__init__(f"degree {degree} of vertex {vertex} is not divisible by {r}")
        self.vertex = vertex


class BadShapeError(HypothesisError):
    pass


class DivisibilityViolatedError(HypothesisError):
    pass


class NoValidSplitError(HypothesisError):
    pass


class DegreeSumMismatchError(HypothesisError):
    pass


class UnsupportedSplitError(HypothesisError):
    pass


class InvalidFactorizationError(HypothesisError):
    pass


class NotPerfectMatchingError(HypothesisError):
    pass


class MatchingsNotDisjointPerfectError(HypothesisError):
    pass


class NoPerfectMatchingError(HypothesisError):
    pass


class NoDisjointMatchingsError(HypothesisError):
    pass


class No2FactorFoundError(HypothesisError):
    pass


class NotTriangleFreeError(HypothesisError):
    pass


class CommonNeighborBoundViolatedError(HypothesisError):
    def __init__(self, u: int, v: int, common: int, bound: int):
        super().__init__(
            f"adjacent vertices {u} and {v} share {common} neighbours (bound {bound})"
        )
        self.u = u
        self.v = v
        self.common = common
        self.bound = bound


# -- search / generation -----------------------------------------------------------


class SearchBudgetExceeded(DoubleStarError, RuntimeError):
    """A bounded search ran out of budget. Carries the offending input."""

    def __init__(self, message: str, instance: object = None):
        super().__init__(message)
        self.instance = instance


class RepairLoopExceeded(DoubleStarError, RuntimeError):
    pass


class GenerationError(DoubleStarError, ValueError):
    pass


class ParityViolatedError(GenerationError):
    pass


class BadOffsetsError(GenerationError):
    pass


class GenerationFailed(DoubleStarError, RuntimeError):
    pass
