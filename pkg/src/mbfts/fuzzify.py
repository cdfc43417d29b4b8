"""Triangular fuzzy sets over a partition and crisp-to-label mapping.

Fuzzy set ``A_j`` has grade 1 on its own interval and 0.5 on the two
neighbouring intervals. A crisp value therefore has maximum membership in
exactly the set of the interval that contains it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .exceptions import InvalidArgumentError, OutOfUniverseError
from .partition import Partition
from .series import TimeSeries

NEIGHBOUR_GRADE = 0.5
STRICT = "strict"
CLAMP = "clamp"
BOUNDARY_MODES = (STRICT, CLAMP)


@dataclass(frozen=True)
class FuzzifiedSeries:
    labels: tuple[tuple[int, int], ...]
    partition: Partition

    def __post_init__(self):
        labels = tuple((int(y), int(j)) for y, j in self.labels)
        bad = [(y, j) for y, j in labels if not 1 <= j <= self.partition.n]
        if bad:
            raise InvalidArgumentError(f"label out of range 1..{self.partition.n}: {bad[0]}")
        object.__setattr__(self, "labels", labels)

    @property
    def years(self) -> list[int]:
        return [y for y, _ in self.labels]

    @property
    def label_sequence(self) -> list[int]:
        return [j for _, j in self.labels]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.labels)


def _check_mode(mode: str):
    if mode not in BOUNDARY_MODES:
        raise InvalidArgumentError(f"boundary mode must be one of {BOUNDARY_MODES}, got {mode!r}")


def fuzzify_value(partition: Partition, value: float, mode: str = STRICT, year: int | None = None) -> int:
    """Label of the fuzzy set in which ``value`` has maximum membership."""
    _check_mode(mode)
    u = partition.universe
    if not u.contains(value):
        if mode == STRICT:
            raise OutOfUniverseError(value, u.lo, u.hi, year=year)
        return 1 if value < u.lo else partition.n
    return partition.locate(value)


def fuzzify_series(partition: Partition, series: TimeSeries, mode: str = STRICT) -> FuzzifiedSeries:
    labels = tuple((year, fuzzify_value(partition, value, mode, year=year)) for year, value in series)
    return FuzzifiedSeries(labels, partition)


def membership_vector(partition: Partition, label: int) -> list[tuple[int, float]]:
    """Non-zero grades of fuzzy set ``label`` as ``(interval label, grade)`` pairs."""
    n = partition.n
    if not 1 <= label <= n:
        raise InvalidArgumentError(f"label {label} outside 1..{n}")
    out = []
    if label > 1:
        out.append((label - 1, NEIGHBOUR_GRADE))
    out.append((label, 1.0))
    if label < n:
        out.append((label + 1, NEIGHBOUR_GRADE))
    return out


def membership_grade(partition: Partition, label: int, value: float) -> float:
    """Grade of crisp ``value`` in fuzzy set ``label``."""
    if not partition.universe.contains(value):
        return 0.0
    return dict(membership_vector(partition, label)).get(partition.locate(value), 0.0)
