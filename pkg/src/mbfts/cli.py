"""Command-line interface.

Each stage can be run on its own and reads the previous stage's file, or
``all`` runs the whole chain. Without ``--input`` the bundled Belgian
road-fatality series is used; without ``--config`` the published preset.

Exit codes: 0 success, 1 usage error, 2 data or domain error.
"""
from __future__ import annotations

import argparse
import io
import os
import sys
from pathlib import Path

from . import dataio
from .exceptions import InvalidArgumentError, MbftsError
from .fuzzify import fuzzify_series
from .model import build_defuzz_table, build_flrg_model
from .metrics import evaluate
from .series import TimeSeries
from .pipeline import build_partition, compare_with_references, run_pipeline

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
SUBCOMMANDS = ("partition", "fuzzify", "model", "evaluate", "compare", "plot", "all")

ALL_OUTPUTS = {
    "partition": "partition.csv",
    "fuzzify": "fuzzified.csv",
    "model": "model.txt",
    "evaluate": "evaluation.csv",
    "compare": "comparison.csv",
    "plot": "plot.svg",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mbfts", description="Mean-based partition fuzzy time series forecasting.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, help, formats=None):
        p = sub.add_parser(name, help=help)
        p.add_argument("--config", help="config file (key = value lines)")
        p.add_argument("--input", help="input file; defaults to the bundled series")
        p.add_argument("--output", help="output file ('-' or omitted: stdout)" if name != "all"
                       else "output directory")
        p.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                       help="override a config value (repeatable)")
        if formats:
            p.add_argument("--format", choices=formats, default=formats[0])
        return p

    p = add("partition", "write the refined interval partition", ["csv"])
    p = add("fuzzify", "label every observation", ["csv"])
    p.add_argument("--partition", help="partition CSV from the partition stage")
    p = add("model", "list the fuzzy logical relationship groups")
    p.add_argument("--partition", help="partition CSV from the partition stage")
    p = add("evaluate", "in-sample forecasts with MSE and AFER", ["csv"])
    p.add_argument("--partition", help="partition CSV from the partition stage")
    p = add("compare", "compare against reference forecasts", ["csv"])
    p.add_argument("--partition", help="partition CSV from the partition stage")
    p.add_argument("--reference", action="append", default=[], metavar="NAME=PATH",
                   help="reference forecasts as year,value CSV (repeatable); defaults to the bundled ones")
    p = add("plot", "plot data for actuals against every method", ["svg", "tsv"])
    p.add_argument("--reference", action="append", default=[], metavar="NAME=PATH")
    add("all", "run every stage and write all artifacts into --output")
    return parser


def _key_values(items, what):
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"{what} expects KEY=VALUE, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _check_file(path):
    if path is not None and not os.path.isfile(path):
        raise FileNotFoundError(f"no such file: {path}")
    return path


def _emit(text_or_bytes, output):
    data = text_or_bytes.encode("utf-8") if isinstance(text_or_bytes, str) else text_or_bytes
    if output in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(output).write_bytes(data)


def _render(writer, *args):
    buf = io.StringIO()
    writer(*args, buf)
    return buf.getvalue()


class _Context:
    def __init__(self, args):
        self.args = args
        overrides = _key_values(args.overrides, "--set")
        try:
            dataio.check_config_values(overrides)
        except InvalidArgumentError as exc:
            raise UsageError(f"--set: {exc}") from None
        self.config = dataio.load_config(_check_file(args.config), overrides)
        self.input = _check_file(args.input)
        self.summary = []

    def header(self):
        if self.input is None:
            return dataio.SERIES_HEADER
        return dataio.sniff_header(self.input)

    def series(self):
        return dataio.read_series_csv(self.input or dataio.bundled_path(dataio.BUNDLED_SERIES))

    def partition(self, series=None):
        path = _check_file(getattr(self.args, "partition", None))
        if path is not None:
            return None, dataio.read_partition_csv(path)
        return build_partition(self.config, series)

    def fuzzified(self):
        """(series, fuzzified) from a series CSV or a fuzzified CSV."""
        if self.header() == dataio.FUZZIFIED_HEADER:
            _, partition = self.partition()
            return dataio.read_fuzzified_csv(self.input, partition)
        series = self.series()
        _, partition = self.partition(series)
        return series, fuzzify_series(partition, series, self.config.boundary_mode)

    def references(self):
        given = _key_values(getattr(self.args, "reference", []), "--reference")
        if not given:
            return dataio.load_bundled_references()
        return [(name, dataio.read_series_csv(_check_file(path))) for name, path in given.items()]

    def say(self, line):
        self.summary.append(line)


def _stage_partition(ctx):
    series = ctx.series() if ctx.input else None
    base, partition = ctx.partition(series)
    if series is not None:
        ctx.say(f"base frequencies = {','.join(map(str, base.frequencies))}")
    ctx.say(f"intervals = {partition.n}")
    return _render(dataio.write_partition_csv, partition)


def _stage_fuzzify(ctx):
    series, fuzzified = ctx.fuzzified()
    ctx.say(f"intervals = {fuzzified.partition.n}")
    ctx.say(f"observations = {len(fuzzified)}")
    return _render(dataio.write_fuzzified_csv, series, fuzzified)


def _stage_model(ctx):
    _, fuzzified = ctx.fuzzified()
    model = build_flrg_model(fuzzified, ctx.config.order_k, ctx.config.series_direction)
    ctx.say(f"order = {model.k}")
    ctx.say(f"relationships = {len(model.relationships)}")
    ctx.say(f"groups = {len(model.groups)}")
    return dataio.format_model(model)


def _evaluation(ctx):
    series, fuzzified = ctx.fuzzified()
    partition = fuzzified.partition
    report = evaluate(series, partition, build_defuzz_table(partition), fuzzified)
    ctx.say(f"intervals = {partition.n}")
    return series, report


def _say_metrics(ctx, mse, afer, name=None):
    prefix = f"{name}: " if name else ""
    ctx.say(f"{prefix}MSE = {dataio.format_mse(mse)}  AFER = {dataio.format_afer(afer)}%")


def _stage_evaluate(ctx):
    _, report = _evaluation(ctx)
    _say_metrics(ctx, report.mse, report.afer)
    return _render(dataio.write_evaluation_csv, report)


def _comparison(ctx):
    if ctx.header()[:2] == ["year", "actual"] and ctx.header() != dataio.EVALUATION_HEADER:
        return dataio.read_comparison_csv(ctx.input)
    if ctx.header() == dataio.EVALUATION_HEADER:
        report = dataio.read_evaluation_csv(ctx.input)
        actuals = TimeSeries(tuple((r.year, r.actual) for r in report.rows))
    else:
        actuals, report = _evaluation(ctx)
    return compare_with_references(report, actuals, ctx.references())


def _say_comparison(ctx, comparison):
    for m in comparison.methods:
        _say_metrics(ctx, m.mse, m.afer, m.name)
    ctx.say(f"best by MSE = {comparison.best('mse')}, best by AFER = {comparison.best('afer')}")


def _stage_compare(ctx):
    comparison = _comparison(ctx)
    _say_comparison(ctx, comparison)
    return _render(dataio.write_comparison_csv, comparison)


def _stage_plot(ctx):
    comparison = _comparison(ctx)
    ctx.say(f"methods = {','.join(comparison.names)}")
    return dataio.emit_plot_data(comparison, ctx.args.format)


def _stage_all(ctx):
    outdir = Path(ctx.args.output or "mbfts-output")
    outdir.mkdir(parents=True, exist_ok=True)
    result = run_pipeline(ctx.series(), ctx.config, ctx.references())
    files = {
        "partition": _render(dataio.write_partition_csv, result.partition),
        "fuzzify": _render(dataio.write_fuzzified_csv, result.series, result.fuzzified),
        "model": dataio.format_model(result.model),
        "evaluate": _render(dataio.write_evaluation_csv, result.evaluation),
        "compare": _render(dataio.write_comparison_csv, result.comparison),
        "plot": dataio.emit_plot_data(result.comparison, "svg"),
    }
    for stage, content in files.items():
        _emit(content, outdir / ALL_OUTPUTS[stage])
    ctx.say(f"intervals = {result.partition.n}")
    ctx.say(f"groups = {len(result.model.groups)}")
    _say_metrics(ctx, result.evaluation.mse, result.evaluation.afer)
    _say_comparison(ctx, result.comparison)
    ctx.say(f"artifacts written to {outdir}")
    return None


STAGES = {
    "partition": _stage_partition,
    "fuzzify": _stage_fuzzify,
    "model": _stage_model,
    "evaluate": _stage_evaluate,
    "compare": _stage_compare,
    "plot": _stage_plot,
    "all": _stage_all,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"mbfts: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    stage = args.command
    try:
        ctx = _Context(args)
        content = STAGES[stage](ctx)
        if content is not None:
            # summary goes to stderr when the artifact itself is on stdout
            _emit(content, args.output)
    except UsageError as exc:
        print(f"mbfts {stage}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MbftsError, OSError) as exc:
        print(f"mbfts {stage}: error: {exc}", file=sys.stderr)
        return EXIT_DATA

    stream = sys.stderr if content is not None and args.output in (None, "-") else sys.stdout
    for line in ctx.summary:
        print(line, file=stream)
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
