from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

Pendant = tuple[int, int]  # (pendant vertex, edge index)
Shape = tuple[int, int]


def normalize_shape(shape: Iterable[int]) -> Shape:
    a, b = shape
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class DoubleStar:
    """Central edge ``center1 - center2`` with pendant lists hanging off each end.

    ``x`` hangs from ``center1`` and ``y`` from ``center2``.  An empty side
    leaves a plain star (or a single edge when both sides are empty).
    """

    center1: int
    center2: int
    central_edge: int
    x: tuple[Pendant, ...]
    y: tuple[Pendant, ...]

    @property
    def shape(self) -> Shape:
        return (len(self.x), len(self.y))

    @property
    def size(self) -> int:
        return 1 + len(self.x) + len(self.y)

    def edges(self) -> list[int]:
        return [self.central_edge] + [e for _, e in self.x] + [e for _, e in self.y]

    def relabel(self, vertex_of, edge_of=None) -> DoubleStar:
        edge_of = edge_of or (lambda e: e)
        return DoubleStar(
            vertex_of(self.center1),
            vertex_of(self.center2),
            edge_of(self.central_edge),
            tuple((vertex_of(p), edge_of(e)) for p, e in self.x),
            tuple((vertex_of(p), edge_of(e)) for p, e in self.y),
        )

    def drop_pendants(self, unwanted) -> DoubleStar:
        """Remove pendants whose vertex satisfies ``unwanted``."""
        return DoubleStar(
            self.center1,
            self.center2,
            self.central_edge,
            tuple(p for p in self.x if not unwanted(p[0])),
            tuple(p for p in self.y if not unwanted(p[0])),
        )


@dataclass(frozen=True)
class Decomposition:
    stars: tuple[DoubleStar, ...]
    allowed_shapes: frozenset[Shape]
    source: str = ""
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "stars", tuple(self.stars))
        object.__setattr__(
            self, "allowed_shapes", frozenset(normalize_shape(s) for s in self.allowed_shapes)
        )

    def shape_counts(self) -> Counter:
        return Counter(normalize_shape(s.shape) for s in self.stars)

    def __len__(self) -> int:
        return len(self.stars)
