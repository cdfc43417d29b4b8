import pytest

from mbfts import (InvalidArgumentError, OutOfUniverseError, TimeSeries, fuzzify_series,
                   fuzzify_value, membership_vector)
from mbfts.fuzzify import membership_grade

import published

ASCENDING_LABELS = [24, 18, 22, 25, 27, 24, 26, 23, 18, 19, 12, 8, 18, 13, 16, 20, 24, 19, 13, 10,
                    15, 5, 2, 3, 5, 4, 6, 7, 3, 1, 1]


def _scan(partition, value):
    # oracle: linear scan over explicit interval membership
    n = partition.n
    for j, (lo, hi) in enumerate(partition.intervals, start=1):
        if lo <= value < hi or (j == n and value == hi):
            return j
    raise AssertionError("not covered")


def test_fuzzify_value_examples(partition):
    assert fuzzify_value(partition, 953) == 1
    assert fuzzify_value(partition, 1574) == 24
    assert fuzzify_value(partition, partition.midpoint(10)) == 10


def test_fuzzify_boundaries(partition):
    assert fuzzify_value(partition, 900) == 1
    assert fuzzify_value(partition, 1700) == 29
    assert fuzzify_value(partition, 1100) == 2


def test_fuzzify_strict_and_clamp(partition):
    with pytest.raises(OutOfUniverseError) as err:
        fuzzify_value(partition, 1800)
    assert (err.value.lo, err.value.hi) == (900.0, 1700.0)
    assert fuzzify_value(partition, 1800, mode="clamp") == 29
    assert fuzzify_value(partition, 10, mode="clamp") == 1
    with pytest.raises(InvalidArgumentError):
        fuzzify_value(partition, 1000, mode="round")


def test_fuzzify_series_published(partition, series):
    fz = fuzzify_series(partition, series)
    assert fz.years == list(range(1974, 2005))
    expected = [_scan(partition, v) for v in series.values]
    assert expected == ASCENDING_LABELS
    assert fz.label_sequence == expected


def test_fuzzify_series_trivial(partition):
    assert len(fuzzify_series(partition, TimeSeries(()))) == 0
    assert fuzzify_series(partition, TimeSeries(((2004, 953.0),))).labels == ((2004, 1),)


def test_fuzzify_series_reports_failing_point(partition):
    with pytest.raises(OutOfUniverseError) as err:
        fuzzify_series(partition, TimeSeries(((2000, 1000.0), (2001, 5000.0), (2002, 6000.0))))
    assert err.value.year == 2001


def test_label_midpoints_match_published_column(partition, fuzzified):
    mids = {y: partition.midpoint(j) for y, j in fuzzified}
    for year, _, mid, *_ in published.EVALUATION:
        assert mids[year] == pytest.approx(mid, abs=0.01)


def test_membership_vectors(partition):
    assert membership_vector(partition, 1) == [(1, 1.0), (2, 0.5)]
    assert membership_vector(partition, 15) == [(14, 0.5), (15, 1.0), (16, 0.5)]
    assert membership_vector(partition, 29) == [(28, 0.5), (29, 1.0)]
    for bad in (0, 30):
        with pytest.raises(InvalidArgumentError):
            membership_vector(partition, bad)


def test_membership_grade_sums(partition):
    for j in range(1, partition.n + 1):
        total = sum(g for _, g in membership_vector(partition, j))
        assert total == (1.5 if j in (1, partition.n) else 2.0)


def test_max_membership_is_own_label(partition, series):
    for v in series.values:
        grades = [membership_grade(partition, j, v) for j in range(1, partition.n + 1)]
        assert grades.index(max(grades)) + 1 == fuzzify_value(partition, v)
