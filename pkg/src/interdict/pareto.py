"""Frontier containers and the set-level operations the solver composes.

A LabelSet is a deduplicated antichain of objective points in canonical
order: strictly increasing f1, strictly decreasing f2. Two distinct
nondominated points can never share a coordinate, so that order is
equivalent to mutual nondominance and makes membership binary-searchable.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Sequence

from .model import Point, point_add, point_min


@dataclass(frozen=True)
class LabelSet:
    """Canonically sorted set of mutually nondominated points.

    ``provenance`` optionally carries one backpointer record per point
    (aligned by index); see the solver for the record layout.
    """

    points: tuple[Point, ...]
    provenance: tuple[Any, ...] | None = None

    def __post_init__(self):
        pts = self.points
        for i in range(1, len(pts)):
            if not (pts[i - 1][0] < pts[i][0] and pts[i - 1][1] > pts[i][1]):
                raise ValueError(
                    f"points not in canonical nondominated order at index {i}: "
                    f"{pts[i - 1]} then {pts[i]}"
                )
        if self.provenance is not None and len(self.provenance) != len(pts):
            raise ValueError("provenance length does not match points")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def covers(self, p: Point) -> bool:
        """True iff some member equals ``p`` or dominates it."""
        f1s = [q[0] for q in self.points]
        i = bisect_left(f1s, p[0])
        return i < len(self.points) and self.points[i][1] >= p[1]


EMPTY_LABELSET = LabelSet(())


def _sweep(unique_points: Iterable[Point]) -> list[Point]:
    """Nondominated subset of already-deduplicated points, canonical order.

    Sort by f1 then f2 descending; a point survives iff its f2 strictly
    exceeds every f2 seen so far (i.e. that of any point with >= f1).
    """
    kept: list[Point] = []
    best_f2 = None
    for p in sorted(unique_points, key=lambda q: (-q[0], -q[1])):
        if best_f2 is None or p[1] > best_f2:
            kept.append(p)
            best_f2 = p[1]
    kept.reverse()
    return kept


def filter_nondominated(points: Iterable[Point]) -> LabelSet:
    """Drop every point dominated by another input point; deduplicate."""
    return LabelSet(tuple(_sweep(set(points))))


def filter_with_payloads(
    pairs: Iterable[tuple[Point, Hashable]]
) -> LabelSet:
    """Like filter_nondominated over the points, keeping one payload each.

    Duplicate points merge to a single representative whose payload is the
    first one seen, so callers control the tie-break by emission order.
    """
    chosen: dict[Point, Any] = {}
    get = chosen.get
    for p, payload in pairs:
        if get(p) is None:
            chosen[p] = payload
    pts = _sweep(chosen)
    return LabelSet(tuple(pts), tuple(chosen[p] for p in pts))


def minkowski_sum(a: LabelSet | Sequence[Point], b: LabelSet | Sequence[Point]) -> list[Point]:
    """All pairwise componentwise sums, unfiltered (|a|*|b| candidates)."""
    return [point_add(p, q) for p in a for q in b]


def min_combine(a: LabelSet | Sequence[Point], b: LabelSet | Sequence[Point]) -> list[Point]:
    """All pairwise componentwise minima, unfiltered."""
    return [point_min(p, q) for p in a for q in b]
