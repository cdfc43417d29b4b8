"""File formats: series/reference CSVs, run configuration, reports and plot data.

Floats in data rows are written with ``repr`` so that every file round-trips
exactly; summary footers use display rounding (MSE 2 dp, AFER 4 dp).
"""
from __future__ import annotations

import csv
import io
import math
import os
import re
from dataclasses import asdict, dataclass, fields, replace
from importlib import resources
from typing import IO, Mapping, Union

from .exceptions import DataError, InvalidArgumentError, ParseError
from .fuzzify import BOUNDARY_MODES, FuzzifiedSeries
from .metrics import ComparisonReport, EvaluationReport, EvaluationRow, compare
from .model import ASCENDING, DESCENDING, DIRECTIONS, FALLBACKS, FlrgModel, PERSIST
from .partition import Partition, Universe
from .series import TimeSeries

Source = Union[str, os.PathLike, IO[bytes], IO[str], bytes]

MSE_DECIMALS = 2
AFER_DECIMALS = 4

BUNDLED_SERIES = "belgium_accidents.csv"
BUNDLED_REFERENCES = (("Jilani", "reference_jilani.csv"), ("Lee", "reference_lee.csv"))
BUNDLED_PRESET = "paper_preset.conf"

SERIES_HEADER = ["year", "value"]
PARTITION_HEADER = ["index", "lo", "hi", "midpoint"]
FUZZIFIED_HEADER = ["year", "value", "label", "interval_lo", "interval_hi", "midpoint"]
EVALUATION_HEADER = ["year", "actual", "midpoint", "forecast", "squared_error", "relative_error"]

_THOUSANDS = re.compile(r"^[+-]?\d{1,3}(,\d{3})+(\.\d*)?$")


def fmt(x: float) -> str:
    return repr(float(x))


def bundled_path(name: str):
    return resources.files("mbfts") / "data" / name


def _read_text(source: Source) -> str:
    if isinstance(source, bytes):
        data = source
    elif isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            data = fh.read()
    elif hasattr(source, "read_bytes"):
        data = source.read_bytes()
    else:
        data = source.read()
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc}") from None


def _rows(source: Source) -> list[tuple[int, list[str]]]:
    text = _read_text(source)
    out = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not c.strip() for c in row):
            continue
        out.append((lineno, [c.strip() for c in row]))
    return out


def _parse_number(text: str, lineno: int, what: str) -> float:
    if _THOUSANDS.match(text):
        text = text.replace(",", "")
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"cannot parse {what} {text!r}", lineno) from None


def _parse_year(text: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"cannot parse year {text!r}", lineno) from None


def sniff_header(source: Source) -> list[str]:
    rows = _rows(source)
    return [c.lower() for c in rows[0][1]] if rows else []


# -- series ------------------------------------------------------------------

def read_series_csv(source: Source) -> TimeSeries:
    """Read a ``year,value`` CSV (any year order) into an ascending TimeSeries.

    Values may carry thousands separators (``"1,369"``), quoted or not.
    """
    rows = _rows(source)
    if not rows:
        raise DataError("empty input: expected a 'year,value' header")
    lineno, header = rows[0]
    if [c.lower() for c in header[:2]] != SERIES_HEADER:
        raise ParseError(f"expected header 'year,value', got {','.join(header)!r}", lineno)
    points = []
    for lineno, row in rows[1:]:
        if len(row) < 2:
            raise ParseError(f"expected 2 fields, got {len(row)}", lineno)
        value_text = row[1] if len(row) == 2 else ",".join(row[1:])
        if len(row) > 2 and not _THOUSANDS.match(value_text):
            raise ParseError(f"expected 2 fields, got {len(row)}", lineno)
        points.append((_parse_year(row[0], lineno), _parse_number(value_text, lineno, "value")))
    if not points:
        raise DataError("no data rows after the header")
    return TimeSeries.from_pairs(points)


def write_series_csv(series: TimeSeries, sink: IO[str]) -> None:
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(SERIES_HEADER)
    for year, value in series:
        w.writerow([year, fmt(value)])


def load_bundled_series() -> TimeSeries:
    return read_series_csv(bundled_path(BUNDLED_SERIES))


def load_bundled_references() -> list[tuple[str, TimeSeries]]:
    return [(name, read_series_csv(bundled_path(fname))) for name, fname in BUNDLED_REFERENCES]


# -- configuration -----------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    universe_lo: float = 900.0
    universe_hi: float = 1700.0
    base_interval_count: int = 4
    subdivision_counts: tuple[int, ...] = (1, 6, 13, 9)
    order_k: int = 3
    boundary_mode: str = "strict"
    fallback: str = PERSIST
    series_direction: str = ASCENDING

    def __post_init__(self):
        object.__setattr__(self, "subdivision_counts", tuple(int(c) for c in self.subdivision_counts))
        if not self.universe_lo < self.universe_hi:
            raise InvalidArgumentError(f"universe_lo must be < universe_hi, got {self.universe_lo}, {self.universe_hi}")
        if self.base_interval_count < 1:
            raise InvalidArgumentError("base_interval_count must be >= 1")
        if len(self.subdivision_counts) != self.base_interval_count:
            raise InvalidArgumentError(
                f"subdivision_counts has {len(self.subdivision_counts)} entries, "
                f"base_interval_count is {self.base_interval_count}"
            )
        if any(c < 1 for c in self.subdivision_counts):
            raise InvalidArgumentError("subdivision_counts entries must be >= 1")
        if self.order_k < 1:
            raise InvalidArgumentError("order_k must be >= 1")
        if self.boundary_mode not in BOUNDARY_MODES:
            raise InvalidArgumentError(f"boundary_mode must be one of {BOUNDARY_MODES}")
        if self.fallback not in FALLBACKS:
            raise InvalidArgumentError(f"fallback must be one of {FALLBACKS}")
        direction = DESCENDING if self.series_direction == "descending" else self.series_direction
        if direction not in DIRECTIONS:
            raise InvalidArgumentError(f"series_direction must be one of {DIRECTIONS}")
        object.__setattr__(self, "series_direction", direction)

    @property
    def universe(self) -> Universe:
        return Universe(self.universe_lo, self.universe_hi)

    def with_values(self, values: Mapping[str, str]) -> RunConfig:
        """Copy with string-valued settings applied, as read from a file or ``--set``."""
        return replace(self, **check_config_values(values))

    def to_text(self) -> str:
        lines = []
        for key, value in asdict(self).items():
            if isinstance(value, tuple):
                value = ",".join(str(v) for v in value)
            lines.append(f"{key} = {value}")
        return "\n".join(lines) + "\n"


def check_config_values(values: Mapping[str, str]) -> dict:
    """Coerce raw strings to typed settings; unknown keys and bad literals raise."""
    known = {f.name for f in fields(RunConfig)}
    out = {}
    for key, raw in values.items():
        if key not in known:
            raise InvalidArgumentError(f"unknown configuration key {key!r}")
        out[key] = _coerce(key, raw)
    return out


def _coerce(key: str, raw: str):
    raw = raw.strip()
    try:
        if key in ("universe_lo", "universe_hi"):
            return float(raw)
        if key in ("base_interval_count", "order_k"):
            return int(raw)
        if key == "subdivision_counts":
            return tuple(int(p) for p in raw.split(","))
    except ValueError:
        raise InvalidArgumentError(f"bad value for {key}: {raw!r}") from None
    return raw


def parse_config_text(text: str) -> dict[str, str]:
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key.isidentifier():
            raise ParseError(f"expected 'identifier = value', got {line!r}", lineno)
        values[key] = value.strip()
    return values


def load_config(source: Source | None = None, overrides: Mapping[str, str] | None = None) -> RunConfig:
    """Preset, then config file, then overrides; later layers win."""
    cfg = RunConfig()
    if source is not None:
        cfg = cfg.with_values(parse_config_text(_read_text(source)))
    if overrides:
        cfg = cfg.with_values(overrides)
    return cfg


def load_preset() -> RunConfig:
    return load_config(bundled_path(BUNDLED_PRESET))


# -- partition ---------------------------------------------------------------

def write_partition_csv(partition: Partition, sink: IO[str]) -> None:
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(PARTITION_HEADER)
    for j, ((lo, hi), mid) in enumerate(zip(partition.intervals, partition.midpoints), start=1):
        w.writerow([j, fmt(lo), fmt(hi), fmt(mid)])


def read_partition_csv(source: Source) -> Partition:
    rows = _rows(source)
    if not rows or [c.lower() for c in rows[0][1]] != PARTITION_HEADER:
        raise ParseError(f"expected header {','.join(PARTITION_HEADER)!r}", 1)
    intervals = []
    for lineno, row in rows[1:]:
        if len(row) != 4:
            raise ParseError(f"expected 4 fields, got {len(row)}", lineno)
        if _parse_year(row[0], lineno) != len(intervals) + 1:
            raise ParseError("interval indices must run 1..n in order", lineno)
        intervals.append((_parse_number(row[1], lineno, "lo"), _parse_number(row[2], lineno, "hi")))
    if not intervals:
        raise DataError("partition file has no intervals")
    return Partition(Universe(intervals[0][0], intervals[-1][1]), tuple(intervals))


# -- fuzzified series --------------------------------------------------------

def write_fuzzified_csv(series: TimeSeries, fuzzified: FuzzifiedSeries, sink: IO[str]) -> None:
    if series.years != fuzzified.years:
        raise DataError("series and fuzzified series cover different years")
    p = fuzzified.partition
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(FUZZIFIED_HEADER)
    for (year, value), (_, j) in zip(series, fuzzified):
        lo, hi = p.interval(j)
        w.writerow([year, fmt(value), j, fmt(lo), fmt(hi), fmt(p.midpoint(j))])


def read_fuzzified_csv(source: Source, partition: Partition) -> tuple[TimeSeries, FuzzifiedSeries]:
    """Read labels back against ``partition``; interval columns must agree with it."""
    rows = _rows(source)
    if not rows or [c.lower() for c in rows[0][1]] != FUZZIFIED_HEADER:
        raise ParseError(f"expected header {','.join(FUZZIFIED_HEADER)!r}", 1)
    points, labels = [], []
    for lineno, row in rows[1:]:
        if len(row) != 6:
            raise ParseError(f"expected 6 fields, got {len(row)}", lineno)
        year = _parse_year(row[0], lineno)
        j = _parse_year(row[2], lineno)
        if not 1 <= j <= partition.n:
            raise DataError(f"line {lineno}: label {j} outside 1..{partition.n}")
        lo, hi = (_parse_number(c, lineno, "bound") for c in row[3:5])
        if (lo, hi) != partition.interval(j):
            raise DataError(f"line {lineno}: interval of label {j} does not match the partition")
        points.append((year, _parse_number(row[1], lineno, "value")))
        labels.append((year, j))
    series = TimeSeries.from_pairs(points)
    labels.sort()
    return series, FuzzifiedSeries(tuple(labels), partition)


# -- model -------------------------------------------------------------------

def format_model(model: FlrgModel) -> str:
    return "".join(
        ",".join(map(str, ante)) + " -> " + ",".join(map(str, cons)) + "\n"
        for ante, cons in model.sorted_groups()
    )


def parse_model_text(text: str) -> dict[tuple[int, ...], tuple[int, ...]]:
    groups = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        left, sep, right = line.partition("->")
        if not sep:
            raise ParseError(f"expected 'L1,...,Lk -> C1,...', got {line!r}", lineno)
        try:
            groups[tuple(int(x) for x in left.split(","))] = tuple(int(x) for x in right.split(","))
        except ValueError:
            raise ParseError(f"non-integer label in {line!r}", lineno) from None
    return groups


# -- evaluation and comparison -----------------------------------------------

def format_mse(value: float) -> str:
    return f"{value:.{MSE_DECIMALS}f}"


def format_afer(value: float) -> str:
    return f"{value:.{AFER_DECIMALS}f}"


def write_evaluation_csv(report: EvaluationReport, sink: IO[str]) -> None:
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(EVALUATION_HEADER)
    for r in report.rows:
        w.writerow([r.year] + [fmt(x) for x in r[1:]])
    w.writerow(["MSE", format_mse(report.mse)])
    w.writerow(["AFER_percent", format_afer(report.afer)])


def read_evaluation_csv(source: Source) -> EvaluationReport:
    rows = _rows(source)
    if not rows or [c.lower() for c in rows[0][1]] != EVALUATION_HEADER:
        raise ParseError(f"expected header {','.join(EVALUATION_HEADER)!r}", 1)
    out = []
    for lineno, row in rows[1:]:
        if row[0] in ("MSE", "AFER_percent"):
            continue
        if len(row) != 6:
            raise ParseError(f"expected 6 fields, got {len(row)}", lineno)
        out.append(EvaluationRow(_parse_year(row[0], lineno),
                                 *(_parse_number(c, lineno, "number") for c in row[1:])))
    if not out:
        raise DataError("evaluation file has no rows")
    return EvaluationReport(tuple(out))


def write_comparison_csv(report: ComparisonReport, sink: IO[str]) -> None:
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(["year", "actual"] + report.names)
    for i, (year, actual) in enumerate(report.actuals):
        w.writerow([year, fmt(actual)] + [fmt(m.forecasts[i][1]) for m in report.methods])
    w.writerow(["MSE", ""] + [format_mse(m.mse) for m in report.methods])
    w.writerow(["AFER_percent", ""] + [format_afer(m.afer) for m in report.methods])


def read_comparison_csv(source: Source) -> ComparisonReport:
    rows = _rows(source)
    if not rows:
        raise DataError("empty comparison file")
    header = rows[0][1]
    if [c.lower() for c in header[:2]] != ["year", "actual"] or len(header) < 3:
        raise ParseError("expected header 'year,actual,<method>,...'", rows[0][0])
    names = header[2:]
    actual, columns = [], [[] for _ in names]
    for lineno, row in rows[1:]:
        if row[0] in ("MSE", "AFER_percent"):
            continue
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(row)}", lineno)
        year = _parse_year(row[0], lineno)
        actual.append((year, _parse_number(row[1], lineno, "actual")))
        for col, cell in zip(columns, row[2:]):
            col.append((year, _parse_number(cell, lineno, "forecast")))
    return compare(TimeSeries.from_pairs(actual), list(zip(names, columns)))


# -- plot data ---------------------------------------------------------------

PLOT_FORMATS = ("svg", "tsv")
_PALETTE = ("#000000", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b")


def emit_plot_data(comparison: ComparisonReport, format: str = "svg") -> bytes:
    """Line-chart data for actuals and every method, as TSV or a standalone SVG."""
    if format not in PLOT_FORMATS:
        raise InvalidArgumentError(f"unknown plot format {format!r}; choose from {PLOT_FORMATS}")
    if not comparison.methods or len(comparison.actuals) == 0:
        raise InvalidArgumentError("nothing to plot")
    if format == "tsv":
        return _plot_tsv(comparison).encode("utf-8")
    return _plot_svg(comparison).encode("utf-8")


def _plot_tsv(c: ComparisonReport) -> str:
    lines = ["\t".join(["year", "actual"] + c.names)]
    for i, (year, actual) in enumerate(c.actuals):
        lines.append("\t".join([str(year), fmt(actual)] + [fmt(m.forecasts[i][1]) for m in c.methods]))
    return "\n".join(lines) + "\n"


def _nice_step(span: float, target: int = 6) -> float:
    raw = span / target
    mag = 10.0 ** math.floor(math.log10(raw))
    for m in (1, 2, 2.5, 5):
        if mag * m >= raw:
            return mag * m
    return mag * 10


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def _plot_svg(c: ComparisonReport, width: int = 800, height: int = 480) -> str:
    left, right, top, bottom = 70, 150, 40, 50
    years = c.actuals.years
    series = [("actual", list(c.actuals.values))] + [(m.name, [v for _, v in m.forecasts]) for m in c.methods]
    lo = min(min(v) for _, v in series)
    hi = max(max(v) for _, v in series)
    if hi == lo:
        lo, hi = lo - 1.0, hi + 1.0
    pad = (hi - lo) * 0.05
    lo, hi = lo - pad, hi + pad
    x0, x1 = years[0], years[-1] if years[-1] != years[0] else years[0] + 1
    pw, ph = width - left - right, height - top - bottom

    def sx(year):
        return left + (year - x0) / (x1 - x0) * pw

    def sy(value):
        return top + (hi - value) / (hi - lo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#888888"/>',
    ]
    step = _nice_step(hi - lo)
    i = math.floor(lo / step) + 1
    while i * step < hi:
        y = sy(i * step)
        out.append(f'<line x1="{left}" y1="{y:.2f}" x2="{left + pw}" y2="{y:.2f}" stroke="#eeeeee"/>')
        out.append(f'<text x="{left - 6}" y="{y + 4:.2f}" text-anchor="end">{i * step:g}</text>')
        i += 1
    ystep = max(1, round((x1 - x0) / 10))
    for year in years:
        if (year - x0) % ystep == 0:
            x = sx(year)
            out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 4}" stroke="#888888"/>')
            out.append(f'<text x="{x:.2f}" y="{top + ph + 18}" text-anchor="middle">{year}</text>')
    out.append(f'<text x="{left + pw / 2:.2f}" y="{height - 8}" text-anchor="middle">year</text>')
    out.append(f'<text x="16" y="{top + ph / 2:.2f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {top + ph / 2:.2f})">value</text>')
    for k, (name, values) in enumerate(series):
        color = _PALETTE[k % len(_PALETTE)]
        pts = " ".join(f"{sx(y):.2f},{sy(v):.2f}" for y, v in zip(years, values))
        out.append(f'<polyline data-series="{_esc(name)}" points="{pts}" fill="none" '
                   f'stroke="{color}" stroke-width="{2 if k == 0 else 1.5}"/>')
        ly = top + 14 + 18 * k
        out.append(f'<line x1="{left + pw + 12}" y1="{ly}" x2="{left + pw + 36}" y2="{ly}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{left + pw + 42}" y="{ly + 4}">{_esc(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
