"""Forecast accuracy: MSE, AFER, per-year evaluation and method comparison.

AFER is the mean relative absolute error ``|A - F| / A`` in percent.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .exceptions import DomainError, InconsistencyError, InvalidArgumentError
from .fuzzify import FuzzifiedSeries
from .model import DefuzzTable, reconstruct_in_sample
from .partition import Partition
from .series import TimeSeries


def _as_arrays(pairs):
    arr = np.asarray(list(pairs), dtype=float)
    if arr.size == 0:
        raise InvalidArgumentError("need at least one (actual, forecast) pair")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidArgumentError("pairs must be a sequence of (actual, forecast)")
    return arr[:, 0], arr[:, 1]


def mse(pairs: Iterable[tuple[float, float]]) -> float:
    actual, forecast = _as_arrays(pairs)
    return float(np.mean((actual - forecast) ** 2))


def relative_errors(actual, forecast) -> np.ndarray:
    actual = np.asarray(actual, dtype=float)
    forecast = np.asarray(forecast, dtype=float)
    if np.any(actual <= 0):
        raise DomainError("relative error needs strictly positive actual values")
    return np.abs(actual - forecast) / actual


def afer(pairs: Iterable[tuple[float, float]]) -> float:
    """Average forecasting error rate, in percent."""
    actual, forecast = _as_arrays(pairs)
    return float(np.mean(relative_errors(actual, forecast)) * 100.0)


class EvaluationRow(NamedTuple):
    year: int
    actual: float
    midpoint: float
    forecast: float
    squared_error: float
    relative_error: float


@dataclass(frozen=True)
class EvaluationReport:
    rows: tuple[EvaluationRow, ...]

    def __post_init__(self):
        if not self.rows:
            raise InvalidArgumentError("an evaluation report needs at least one row")
        object.__setattr__(self, "rows", tuple(EvaluationRow(*r) for r in self.rows))

    @property
    def mse(self) -> float:
        return float(np.mean([r.squared_error for r in self.rows]))

    @property
    def afer(self) -> float:
        return float(np.mean([r.relative_error for r in self.rows]) * 100.0)

    @property
    def years(self) -> list[int]:
        return [r.year for r in self.rows]

    def forecasts(self) -> TimeSeries:
        return TimeSeries(tuple((r.year, r.forecast) for r in self.rows))


def evaluate(series: TimeSeries, partition: Partition, table: DefuzzTable,
             fuzzified: FuzzifiedSeries) -> EvaluationReport:
    """Per-year in-sample reconstruction with squared and relative errors."""
    if series.years != fuzzified.years:
        raise InconsistencyError("series and fuzzified series cover different years")
    rows = []
    for (year, actual), rec in zip(series, reconstruct_in_sample(partition, table, fuzzified)):
        err = actual - rec.forecast
        rows.append(EvaluationRow(year, actual, rec.midpoint, rec.forecast,
                                  err * err, float(relative_errors([actual], [rec.forecast])[0])))
    return EvaluationReport(tuple(rows))


class MethodResult(NamedTuple):
    name: str
    forecasts: tuple[tuple[int, float], ...]
    mse: float
    afer: float


@dataclass(frozen=True)
class ComparisonReport:
    actuals: TimeSeries
    methods: tuple[MethodResult, ...]

    @property
    def names(self) -> list[str]:
        return [m.name for m in self.methods]

    def method(self, name: str) -> MethodResult:
        for m in self.methods:
            if m.name == name:
                return m
        raise KeyError(name)

    def best(self, metric: str = "mse") -> str:
        return min(self.methods, key=lambda m: getattr(m, metric)).name


def _forecast_map(forecasts) -> Mapping[int, float]:
    if isinstance(forecasts, Mapping):
        return {int(y): float(v) for y, v in forecasts.items()}
    return {int(y): float(v) for y, v in forecasts}


def compare(actuals: TimeSeries, methods: Sequence[tuple[str, object]]) -> ComparisonReport:
    """Score each named forecast set against ``actuals`` over every actual year.

    ``methods`` holds ``(name, forecasts)`` where forecasts is a TimeSeries, a
    ``{year: value}`` mapping or an iterable of ``(year, value)``.
    """
    if len(actuals) == 0:
        raise InvalidArgumentError("comparison needs a non-empty actual series")
    results = []
    for name, forecasts in methods:
        fmap = _forecast_map(forecasts)
        missing = [y for y in actuals.years if y not in fmap]
        if missing:
            raise InconsistencyError(f"method {name!r} has no forecast for year {missing[0]}")
        fc = tuple((y, fmap[y]) for y in actuals.years)
        pairs = [(a, f) for a, (_, f) in zip(actuals.values, fc)]
        results.append(MethodResult(name, fc, mse(pairs), afer(pairs)))
    return ComparisonReport(actuals, tuple(results))
