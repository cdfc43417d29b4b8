"""Order-k fuzzy logical relationship groups and harmonic-mean defuzzification."""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, NamedTuple, Sequence

from .exceptions import (DomainError, InconsistencyError, InsufficientDataError,
                         InvalidArgumentError, NoMatchError)
from .fuzzify import NEIGHBOUR_GRADE, FuzzifiedSeries
from .partition import Partition

ASCENDING = "ascending"
DESCENDING = "paper-listing-descending"
DIRECTIONS = (ASCENDING, DESCENDING)

PERSIST = "persist"
ERROR = "error"
FALLBACKS = (PERSIST, ERROR)

Antecedent = tuple[int, ...]


def _normalize_direction(direction: str) -> str:
    if direction == "descending":
        return DESCENDING
    if direction not in DIRECTIONS:
        raise InvalidArgumentError(f"series direction must be one of {DIRECTIONS}, got {direction!r}")
    return direction


@dataclass(frozen=True)
class FlrgModel:
    k: int
    relationships: tuple[tuple[Antecedent, int], ...]
    source_order: str = ASCENDING
    groups: Mapping[Antecedent, tuple[int, ...]] = field(init=False, compare=False)

    def __post_init__(self):
        groups: dict[Antecedent, list[int]] = {}
        for ante, cons in self.relationships:
            if len(ante) != self.k:
                raise InvalidArgumentError(f"antecedent {ante} does not have order {self.k}")
            bucket = groups.setdefault(tuple(ante), [])
            if cons not in bucket:
                bucket.append(cons)
        object.__setattr__(self, "groups", MappingProxyType({a: tuple(c) for a, c in groups.items()}))

    def __hash__(self):
        return hash((self.k, self.relationships, self.source_order))

    def lookup(self, antecedent: Sequence[int]) -> tuple[int, ...] | None:
        return self.groups.get(tuple(antecedent))

    def sorted_groups(self) -> list[tuple[Antecedent, tuple[int, ...]]]:
        return sorted(self.groups.items())


@dataclass(frozen=True)
class DefuzzTable:
    """Defuzzified value per label; ``table[j]`` is 1-based."""

    values: tuple[float, ...]
    partition: Partition

    def __getitem__(self, label: int) -> float:
        if not 1 <= label <= len(self.values):
            raise InvalidArgumentError(f"label {label} outside 1..{len(self.values)}")
        return self.values[label - 1]

    def __len__(self) -> int:
        return len(self.values)


class InSampleRow(NamedTuple):
    year: int
    label: int
    midpoint: float
    forecast: float


def defuzz_centroid(partition: Partition, j: int) -> float:
    """Weighted harmonic mean of the midpoints around interval ``j``.

    Weights are the triangular grades: 1 for ``a_j`` and 0.5 for each
    neighbour that exists, so the two edge labels use two terms and every
    other label uses three.
    """
    n = partition.n
    if n < 2:
        raise InvalidArgumentError("defuzzification needs a partition with at least 2 intervals")
    if not 1 <= j <= n:
        raise InvalidArgumentError(f"label {j} outside 1..{n}")
    terms = [(1.0, partition.midpoint(j))]
    if j > 1:
        terms.append((NEIGHBOUR_GRADE, partition.midpoint(j - 1)))
    if j < n:
        terms.append((NEIGHBOUR_GRADE, partition.midpoint(j + 1)))
    if any(a <= 0 for _, a in terms):
        raise DomainError(f"harmonic defuzzification of label {j} needs positive midpoints, got {[a for _, a in terms]}")
    return sum(w for w, _ in terms) / sum(w / a for w, a in terms)


def build_defuzz_table(partition: Partition) -> DefuzzTable:
    return DefuzzTable(tuple(defuzz_centroid(partition, j) for j in range(1, partition.n + 1)), partition)


def build_flrg_model(fuzzified: FuzzifiedSeries, k: int = 3, direction: str = ASCENDING) -> FlrgModel:
    """Collect every ``k`` consecutive labels -> next label relationship."""
    direction = _normalize_direction(direction)
    if k < 1:
        raise InvalidArgumentError(f"order k must be >= 1, got {k}")
    seq = fuzzified.label_sequence
    if len(seq) <= k:
        raise InsufficientDataError(f"an order-{k} model needs at least {k + 1} observations, got {len(seq)}")
    if direction == DESCENDING:
        seq = seq[::-1]
    rels = tuple((tuple(seq[i - k:i]), seq[i]) for i in range(k, len(seq)))
    return FlrgModel(k, rels, direction)


def reconstruct_in_sample(partition: Partition, table: DefuzzTable,
                          fuzzified: FuzzifiedSeries) -> list[InSampleRow]:
    """Each year's forecast is the defuzzified value of its own label."""
    if table.partition != partition or fuzzified.partition != partition:
        raise InconsistencyError("partition, defuzz table and fuzzified series disagree on the partition")
    return [InSampleRow(year, j, partition.midpoint(j), table[j]) for year, j in fuzzified]


def forecast_next(model: FlrgModel, table: DefuzzTable, recent: Sequence[int],
                  fallback: str = PERSIST) -> tuple[float, bool]:
    """Forecast from the last ``k`` labels; returns ``(value, matched)``."""
    if fallback not in FALLBACKS:
        raise InvalidArgumentError(f"fallback must be one of {FALLBACKS}, got {fallback!r}")
    recent = tuple(int(j) for j in recent)
    if len(recent) != model.k:
        raise InvalidArgumentError(f"need exactly {model.k} recent labels, got {len(recent)}")
    for j in recent:
        table[j]  # range check
    consequents = model.lookup(recent)
    if consequents:
        return sum(table[c] for c in consequents) / len(consequents), True
    if fallback == ERROR:
        raise NoMatchError(f"no relationship group for antecedent {recent}")
    return table[recent[-1]], False
