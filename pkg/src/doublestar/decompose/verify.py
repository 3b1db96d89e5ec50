"""Independent certificate check for double-star decompositions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..graph import Graph
from .types import Decomposition, DoubleStar, normalize_shape


@dataclass(frozen=True)
class Violation:
    star: int | None
    reason: str

    def __str__(self) -> str:
        where = "graph" if self.star is None else f"star {self.star}"
        return f"{where}: {self.reason}"


@dataclass
class VerificationReport:
    valid: bool
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid


def _check_star(g: Graph, idx: int, star: DoubleStar, out: list[Violation]) -> list[int]:
    """Per-star structural checks; returns the edge indices the star claims."""
    bad = lambda reason: out.append(Violation(idx, reason))  # noqa: E731
    u1, u2 = star.center1, star.center2
    claimed = [star.central_edge]
    if u1 == u2:
        bad("centres coincide")
    for name, v in (("center1", u1), ("center2", u2)):
        if not (isinstance(v, int) and 0 <= v < g.n):
            bad(f"{name} {v!r} is not a vertex")
    if star.central_edge not in g:
        bad(f"central edge {star.central_edge!r} is not an edge")
    elif set(g.endpoints(star.central_edge)) != {u1, u2}:
        bad(f"central edge {star.central_edge} does not join {u1} and {u2}")
    vertices = [u1, u2]
    for side, centre in (("X", u1), ("Y", u2)):
        pendants = star.x if side == "X" else star.y
        for entry in pendants:
            try:
                p, e = entry
            except (TypeError, ValueError):
                bad(f"{side} entry {entry!r} is not a (vertex, edge) pair")
                continue
            claimed.append(e)
            vertices.append(p)
            if e not in g:
                bad(f"{side} edge {e!r} is not an edge")
            elif set(g.endpoints(e)) != {centre, p}:
                bad(f"{side} edge {e} does not join centre {centre} to pendant {p}")
    repeated = [v for v, c in Counter(vertices).items() if c > 1]
    if repeated:
        bad(f"vertices repeated within the star: {sorted(repeated, key=repr)}")
    return claimed


def verify_decomposition(g: Graph, d: Decomposition) -> VerificationReport:
    """Check that ``d`` partitions the edges of ``g`` into allowed double-stars.

    Every problem found is reported; malformed stars become violations rather
    than exceptions.
    """
    violations: list[Violation] = []
    counts: Counter = Counter()
    allowed = {normalize_shape(s) for s in d.allowed_shapes}
    for idx, star in enumerate(d.stars):
        try:
            claimed = _check_star(g, idx, star, violations)
            shape = normalize_shape(star.shape)
        except Exception as exc:  # malformed object
            violations.append(Violation(idx, f"malformed star: {exc}"))
            continue
        if shape not in allowed:
            violations.append(Violation(idx, f"shape {star.shape} not among allowed {sorted(allowed)}"))
        counts.update(claimed)
    for e, c in sorted(counts.items(), key=lambda kv: repr(kv[0])):
        if c > 1:
            violations.append(Violation(None, f"edge {e} covered {c} times"))
    uncovered = [e for e in g.edges if e not in counts]
    if uncovered:
        violations.append(Violation(None, f"{len(uncovered)} uncovered edges: {uncovered[:20]}"))
    return VerificationReport(not violations, violations)
