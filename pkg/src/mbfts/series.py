from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .exceptions import DataError


@dataclass(frozen=True)
class TimeSeries:
    """Yearly observations, stored in ascending year order."""

    points: tuple[tuple[int, float], ...]

    def __post_init__(self):
        pts = tuple((int(y), float(v)) for y, v in self.points)
        years = [y for y, _ in pts]
        if len(set(years)) != len(years):
            dup = sorted({y for y in years if years.count(y) > 1})
            raise DataError(f"duplicate year(s): {dup}")
        if any(b <= a for a, b in zip(years, years[1:])):
            raise DataError("years must be strictly ascending; use TimeSeries.from_pairs to sort")
        neg = [(y, v) for y, v in pts if not v >= 0]
        if neg:
            raise DataError(f"values must be non-negative, got {neg[0]}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, float]]) -> TimeSeries:
        pairs = list(pairs)
        years = [int(y) for y, _ in pairs]
        if len(set(years)) != len(years):
            dup = sorted({y for y in years if years.count(y) > 1})
            raise DataError(f"duplicate year(s): {dup}")
        return cls(tuple(sorted(pairs, key=lambda p: int(p[0]))))

    @property
    def years(self) -> list[int]:
        return [y for y, _ in self.points]

    @property
    def values(self) -> list[float]:
        return [v for _, v in self.points]

    def scaled(self, c: float) -> TimeSeries:
        return TimeSeries(tuple((y, v * c) for y, v in self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return iter(self.points)
