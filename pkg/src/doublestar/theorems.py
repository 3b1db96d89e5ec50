"""Name-based dispatch over every construction, plus the automatic probe."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .decompose import (
    Decomposition,
    decompose_bipartite_degree_divisible,
    decompose_bipartite_divisible,
    decompose_bipartite_two_sizes,
    decompose_even_divisible,
    decompose_even_regular,
    decompose_odd_common_neighbor,
    decompose_odd_four_shapes,
    decompose_odd_one_factorable,
    decompose_odd_triangle_free,
    decompose_odd_two_matchings,
    decompose_regular_bipartite,
)
from .errors import (
    BadShapeError,
    HypothesisError,
    NoDisjointMatchingsError,
    NoPerfectMatchingError,
    NotOddRegularError,
    NotRegularError,
)
from .graph import Graph, bipartition, is_regular
from .matching import find_perfect_matching, find_two_disjoint_perfect_matchings

THEOREMS = (
    "bipartite",
    "bipartite-divisible",
    "bipartite-two-sizes",
    "degree-divisible",
    "even",
    "even-divisible",
    "four-shape",
    "two-matchings",
    "common-neighbor",
    "triangle-free",
    "one-factorable",
)

AUTO_ORDER = ("bipartite", "even", "two-matchings", "common-neighbor", "four-shape")


@dataclass
class Request:
    k1: int | None = None
    k2: int | None = None
    k1b: int | None = None
    k2b: int | None = None
    matchings: Sequence[frozenset[int]] | None = None


def _split(total: int, req: Request, lean_first: bool = False) -> tuple[int, int]:
    """Requested shape, or a default split of ``total`` pendants."""
    if req.k1 is not None and req.k2 is not None:
        return req.k1, req.k2
    if req.k1 is not None:
        return req.k1, total - req.k1
    if req.k2 is not None:
        return total - req.k2, req.k2
    if lean_first:
        return total - 1, 1
    return total - total // 2, total // 2


def _degree(g: Graph) -> int:
    r = is_regular(g)
    if r is None:
        raise NotRegularError("graph is not regular")
    return r


def _two_matchings(g: Graph, req: Request) -> tuple[frozenset[int], frozenset[int]]:
    if req.matchings is not None:
        if len(req.matchings) < 2:
            raise NoDisjointMatchingsError("matching file must list two matchings")
        return req.matchings[0], req.matchings[1]
    found = find_two_disjoint_perfect_matchings(g)
    if found is None:
        raise NoDisjointMatchingsError("no two disjoint perfect matchings found")
    return found


def run_theorem(g: Graph, name: str, req: Request | None = None) -> Decomposition:
    """Apply the named construction; hypothesis failures raise :class:`HypothesisError`."""
    req = req or Request()
    if name == "bipartite":
        return decompose_regular_bipartite(g, *_split(_degree(g) - 1, req))
    if name == "bipartite-divisible":
        if req.k1 is None or req.k2 is None:
            raise BadShapeError("bipartite-divisible needs --k1 and --k2")
        return decompose_bipartite_divisible(g, req.k1, req.k2)
    if name == "bipartite-two-sizes":
        if None in (req.k1, req.k2, req.k1b, req.k2b):
            raise BadShapeError("bipartite-two-sizes needs --k1 --k2 --k1b --k2b")
        return decompose_bipartite_two_sizes(g, (req.k1, req.k2), (req.k1b, req.k2b))
    if name == "degree-divisible":
        if req.k1 is None or req.k2 is None:
            raise BadShapeError("degree-divisible needs --k1 and --k2")
        return decompose_bipartite_degree_divisible(g, req.k1, req.k2)
    if name == "even":
        return decompose_even_regular(g, *_split(_degree(g) // 2 - 1, req))
    if name == "even-divisible":
        if req.k1 is None or req.k2 is None:
            raise BadShapeError("even-divisible needs --k1 and --k2")
        return decompose_even_divisible(g, req.k1, req.k2)
    if name == "four-shape":
        return decompose_odd_four_shapes(g, *_split((_degree(g) - 1) // 2, req))
    if name == "two-matchings":
        k1, k2 = _split((_degree(g) - 1) // 2, req)
        _odd_check(g)
        m1, m2 = _two_matchings(g, req)
        return decompose_odd_two_matchings(g, m1, m2, k1, k2)
    if name == "common-neighbor":
        k1, k2 = _split((_degree(g) - 1) // 2 - 1, req, lean_first=True)
        _odd_check(g)
        if req.matchings:
            m = req.matchings[0]
        else:
            m = find_perfect_matching(g)
            if m is None:
                raise NoPerfectMatchingError("graph has no perfect matching")
        return decompose_odd_common_neighbor(g, m, k1, k2)
    if name == "triangle-free":
        return decompose_odd_triangle_free(g, *_split((_degree(g) - 1) // 2 - 1, req, lean_first=True))
    if name == "one-factorable":
        if req.k1 is None or req.k2 is None:
            raise BadShapeError("one-factorable needs --k1 and --k2")
        return decompose_odd_one_factorable(g, req.matchings, req.k1, req.k2)
    raise ValueError(f"unknown theorem {name!r}")


def _odd_check(g: Graph) -> None:
    r = _degree(g)
    if r % 2 == 0:
        raise NotOddRegularError("graph is not regular of odd degree")


def _applicable(g: Graph, name: str) -> bool:
    r = is_regular(g)
    if r is None or r == 0:
        return False
    if name == "bipartite":
        return bipartition(g) is not None
    if name == "even":
        return r % 2 == 0
    return r % 2 == 1


def run_auto(g: Graph, req: Request | None = None) -> tuple[Decomposition, list[tuple[str, str]]]:
    """Try ``AUTO_ORDER`` in turn; returns the first success and the reasons
    the earlier candidates were skipped."""
    skipped: list[tuple[str, str]] = []
    for name in AUTO_ORDER:
        if not _applicable(g, name):
            skipped.append((name, "hypothesis not met"))
            continue
        try:
            return run_theorem(g, name, req), skipped
        except HypothesisError as exc:
            skipped.append((name, str(exc)))
    reasons = "; ".join(f"{n}: {why}" for n, why in skipped)
    raise HypothesisError(f"no applicable theorem ({reasons})")
