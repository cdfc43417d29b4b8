"""scikit-learn compatible wrapper around the mean-based partition pipeline."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .exceptions import InvalidArgumentError
from .fuzzify import STRICT, fuzzify_series, fuzzify_value
from .metrics import evaluate
from .model import ASCENDING, PERSIST, build_defuzz_table, build_flrg_model, forecast_next
from .partition import (BasePartition, Universe, build_base_partition, count_frequencies,
                        refine_partition, suggest_subdivision_counts)
from .series import TimeSeries


def _as_1d(X) -> np.ndarray:
    X = check_array(X, ensure_2d=False, dtype=np.float64)
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise ValueError(f"expected a univariate series of shape (n,) or (n, 1), got {X.shape}")
        X = X[:, 0]
    return X


class MeanPartitionFTS(TransformerMixin, BaseEstimator):
    """Fuzzy time series forecaster on a mean-based refined partition.

    Parameters
    ----------
    universe : tuple of float or None
        ``(lo, hi)`` bounds of the universe of discourse. ``None`` uses the
        training minimum and maximum.
    n_base_intervals : int
        Number of equal-width base intervals.
    subdivision_counts : sequence of int or int
        Subintervals per base interval. An int is a total to apportion
        proportionally to the training frequencies.
    order : int
        Number of past labels in a relationship antecedent.
    boundary : {"strict", "clamp"}
        Behaviour for values outside the universe.
    fallback : {"persist", "error"}
        What ``forecast`` does when the recent labels match no group.
    direction : {"ascending", "paper-listing-descending"}
        Order in which relationships are read off the training series.

    Attributes
    ----------
    partition_ : Partition
    base_partition_ : BasePartition
    fuzzified_ : FuzzifiedSeries
    model_ : FlrgModel
    defuzz_table_ : DefuzzTable
    labels_ : ndarray of int
        Training labels in chronological order.
    """

    def __init__(self, universe=(900.0, 1700.0), n_base_intervals=4, subdivision_counts=(1, 6, 13, 9),
                 order=3, boundary=STRICT, fallback=PERSIST, direction=ASCENDING):
        self.universe = universe
        self.n_base_intervals = n_base_intervals
        self.subdivision_counts = subdivision_counts
        self.order = order
        self.boundary = boundary
        self.fallback = fallback
        self.direction = direction

    def fit(self, X, y=None, years=None):
        """Fit on a chronologically ordered series ``X``; ``years`` labels the points."""
        values = _as_1d(X)
        if years is None:
            years = np.arange(len(values))
        years = np.asarray(years, dtype=int)
        if years.shape != values.shape:
            raise ValueError("years and X must have the same length")
        series = TimeSeries.from_pairs(zip(years.tolist(), values.tolist()))

        if self.universe is None:
            universe = Universe(values.min(), values.max())
        else:
            universe = Universe(*self.universe)
        base = build_base_partition(universe, self.n_base_intervals)
        freqs = count_frequencies(series, base) if self.boundary == STRICT else None
        if isinstance(self.subdivision_counts, (int, np.integer)):
            if freqs is None:
                raise InvalidArgumentError("an int subdivision_counts needs boundary='strict'")
            counts = suggest_subdivision_counts(freqs, int(self.subdivision_counts))
        else:
            counts = list(self.subdivision_counts)
        if freqs is None:
            freqs = [0] * len(base)

        self.universe_ = universe
        self.base_partition_ = BasePartition(universe, tuple(base), tuple(freqs), tuple(counts))
        self.partition_ = refine_partition(self.base_partition_)
        self.fuzzified_ = fuzzify_series(self.partition_, series, self.boundary)
        self.model_ = build_flrg_model(self.fuzzified_, self.order, self.direction)
        self.defuzz_table_ = build_defuzz_table(self.partition_)
        self.series_ = series
        self.labels_ = np.array(self.fuzzified_.label_sequence, dtype=int)
        self.n_intervals_ = self.partition_.n
        return self

    def _labels(self, X) -> np.ndarray:
        check_is_fitted(self, "partition_")
        return np.array([fuzzify_value(self.partition_, v, self.boundary) for v in _as_1d(X)], dtype=int)

    def transform(self, X):
        """Fuzzy-set labels (1-based) as a column vector."""
        return self._labels(X).reshape(-1, 1)

    def predict(self, X):
        """Defuzzified value of each observation's own label."""
        labels = self._labels(X)
        return np.asarray(self.defuzz_table_.values)[labels - 1]

    def forecast(self, steps=1, recent=None):
        """Forecast ``steps`` values past the training series.

        Each step looks up the group of the last ``order`` labels and feeds
        the label of its own forecast back in.
        """
        check_is_fitted(self, "model_")
        if recent is None:
            labels = list(self.labels_[-self.order:])
        else:
            labels = [int(j) for j in recent]
        out = []
        for _ in range(steps):
            value, _ = forecast_next(self.model_, self.defuzz_table_, labels[-self.order:], self.fallback)
            out.append(value)
            labels.append(fuzzify_value(self.partition_, value, "clamp"))
        return np.array(out)

    def evaluate(self):
        """In-sample evaluation report of the training series."""
        check_is_fitted(self, "partition_")
        return evaluate(self.series_, self.partition_, self.defuzz_table_, self.fuzzified_)

    def score(self, X, y=None):
        """Negative mean squared error of ``predict(X)`` against ``X``."""
        values = _as_1d(X)
        return -float(np.mean((values - self.predict(values)) ** 2))
