"""Universe of discourse partitioning.

The universe is first cut into ``m`` equal base intervals; each base
interval is then cut again into its own number of equal subintervals. The
refined list of intervals is what the fuzzy sets are defined on.

Intervals are half-open ``[lo, hi)`` except the last, which is closed.
Neighbouring intervals share the very same float at their common edge.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exceptions import InvalidArgumentError, OutOfUniverseError
from .series import TimeSeries

Interval = tuple[float, float]


@dataclass(frozen=True)
class Universe:
    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if not self.lo < self.hi:
            raise InvalidArgumentError(f"universe needs lo < hi, got [{self.lo}, {self.hi}]")

    def contains(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    def scaled(self, c: float) -> Universe:
        return Universe(self.lo * c, self.hi * c)


def _split(lo: float, hi: float, count: int) -> list[float]:
    # edges[0] and edges[-1] are the exact inputs, never recomputed
    width = (hi - lo) / count
    return [lo] + [lo + i * width for i in range(1, count)] + [hi]


def _pairs(edges: Sequence[float]) -> tuple[Interval, ...]:
    return tuple(zip(edges[:-1], edges[1:]))


def _check_contiguous(universe: Universe, intervals: Sequence[Interval]):
    if not intervals:
        raise InvalidArgumentError("a partition needs at least one interval")
    if intervals[0][0] != universe.lo or intervals[-1][1] != universe.hi:
        raise InvalidArgumentError("intervals must start at universe.lo and end at universe.hi")
    for k, (lo, hi) in enumerate(intervals):
        if not lo < hi:
            raise InvalidArgumentError(f"interval {k + 1} is empty: [{lo}, {hi}]")
        if k and intervals[k - 1][1] != lo:
            raise InvalidArgumentError(f"gap or overlap between intervals {k} and {k + 1}")


@dataclass(frozen=True)
class BasePartition:
    """Equal-width base intervals with observed frequencies and subdivision counts."""

    universe: Universe
    intervals: tuple[Interval, ...]
    frequencies: tuple[int, ...]
    subdivision_counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple((float(a), float(b)) for a, b in self.intervals))
        object.__setattr__(self, "frequencies", tuple(int(f) for f in self.frequencies))
        object.__setattr__(self, "subdivision_counts", tuple(int(c) for c in self.subdivision_counts))
        _check_contiguous(self.universe, self.intervals)
        if not len(self.intervals) == len(self.frequencies) == len(self.subdivision_counts):
            raise InvalidArgumentError(
                f"got {len(self.intervals)} intervals, {len(self.frequencies)} frequencies "
                f"and {len(self.subdivision_counts)} subdivision counts"
            )
        if any(f < 0 for f in self.frequencies):
            raise InvalidArgumentError("frequencies must be non-negative")

    @classmethod
    def build(cls, universe: Universe, subdivision_counts: Sequence[int],
              series: TimeSeries | None = None) -> BasePartition:
        intervals = build_base_partition(universe, len(subdivision_counts))
        if series is None:
            freqs = [0] * len(intervals)
        else:
            freqs = count_frequencies(series, intervals)
        return cls(universe, tuple(intervals), tuple(freqs), tuple(subdivision_counts))


@dataclass(frozen=True)
class Partition:
    """The refined intervals ``u_1 .. u_n`` and their midpoints.

    Labels are 1-based throughout: label ``j`` refers to ``intervals[j - 1]``.
    """

    universe: Universe
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple((float(a), float(b)) for a, b in self.intervals))
        _check_contiguous(self.universe, self.intervals)
        mids = tuple((lo + hi) / 2 for lo, hi in self.intervals)
        if any(b <= a for a, b in zip(mids, mids[1:])):
            raise InvalidArgumentError("interval midpoints are not strictly increasing")
        object.__setattr__(self, "_midpoints", mids)
        object.__setattr__(self, "_lows", tuple(lo for lo, _ in self.intervals))

    @property
    def midpoints(self) -> tuple[float, ...]:
        return self._midpoints

    @property
    def n(self) -> int:
        return len(self.intervals)

    def interval(self, label: int) -> Interval:
        self._check_label(label)
        return self.intervals[label - 1]

    def midpoint(self, label: int) -> float:
        self._check_label(label)
        return self._midpoints[label - 1]

    def locate(self, value: float) -> int:
        """1-based label of the interval holding ``value``; no range check."""
        return max(1, min(self.n, bisect_right(self._lows, value)))

    def _check_label(self, label: int):
        if not 1 <= label <= self.n:
            raise InvalidArgumentError(f"label {label} outside 1..{self.n}")


def build_base_partition(universe: Universe, m: int) -> list[Interval]:
    """Split ``universe`` into ``m`` contiguous intervals of equal width."""
    if m < 1:
        raise InvalidArgumentError(f"number of base intervals must be >= 1, got {m}")
    return list(_pairs(_split(universe.lo, universe.hi, m)))


def count_frequencies(series: TimeSeries, base: Sequence[Interval]) -> list[int]:
    """Observations per base interval (lower-inclusive, last interval closed)."""
    if not base:
        raise InvalidArgumentError("no base intervals given")
    lo, hi = base[0][0], base[-1][1]
    lows = [a for a, _ in base]
    counts = [0] * len(base)
    for year, value in series:
        if not lo <= value <= hi:
            raise OutOfUniverseError(value, lo, hi, year=year)
        counts[min(len(base), bisect_right(lows, value)) - 1] += 1
    return counts


def refine_partition(base: BasePartition) -> Partition:
    """Replace each base interval by its count of equal-width subintervals."""
    if any(c < 1 for c in base.subdivision_counts):
        raise InvalidArgumentError(f"subdivision counts must all be >= 1, got {list(base.subdivision_counts)}")
    edges = [base.universe.lo]
    for (lo, hi), count in zip(base.intervals, base.subdivision_counts):
        edges.extend(_split(lo, hi, count)[1:])
    return Partition(base.universe, _pairs(edges))


def suggest_subdivision_counts(frequencies: Sequence[int], target_total: int) -> list[int]:
    """Apportion ``target_total`` subintervals proportionally to ``frequencies``.

    Largest-remainder apportionment with a floor of one subinterval per base
    interval; remainder ties go to the lower index. This is a heuristic
    starting point, not the rule behind the published preset ``[1, 6, 13, 9]``.
    """
    total = sum(frequencies)
    if any(f < 0 for f in frequencies):
        raise InvalidArgumentError("frequencies must be non-negative")
    if total <= 0:
        raise InvalidArgumentError("at least one frequency must be positive")
    if target_total < len(frequencies):
        raise InvalidArgumentError(
            f"target_total={target_total} is smaller than the number of base intervals ({len(frequencies)})"
        )
    quotas = [Fraction(f * target_total, total) for f in frequencies]
    counts = [1] * len(frequencies)

    # greedy on the separable convex cost sum |count - quota|; optimal for
    # that objective, and it is the largest-remainder rule once floors are met
    def step_cost(i):
        c, q = counts[i], quotas[i]
        return abs(c + 1 - q) - abs(c - q)

    for _ in range(target_total - len(frequencies)):
        best = min(range(len(counts)), key=lambda i: (step_cost(i), i))
        counts[best] += 1
    return counts
