from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dataio import RunConfig
from .fuzzify import FuzzifiedSeries, fuzzify_series
from .metrics import ComparisonReport, EvaluationReport, compare, evaluate
from .model import DefuzzTable, FlrgModel, build_defuzz_table, build_flrg_model
from .partition import BasePartition, Partition, refine_partition
from .series import TimeSeries

PROPOSED = "proposed"


@dataclass(frozen=True)
class PipelineResult:
    config: RunConfig
    series: TimeSeries
    base: BasePartition
    partition: Partition
    fuzzified: FuzzifiedSeries
    model: FlrgModel
    table: DefuzzTable
    evaluation: EvaluationReport
    comparison: ComparisonReport | None


def build_partition(config: RunConfig, series: TimeSeries | None = None) -> tuple[BasePartition, Partition]:
    base = BasePartition.build(config.universe, config.subdivision_counts,
                               series if config.boundary_mode == "strict" else None)
    return base, refine_partition(base)


def compare_with_references(evaluation: EvaluationReport, actuals: TimeSeries,
                            references: Sequence[tuple[str, TimeSeries]]) -> ComparisonReport:
    return compare(actuals, list(references) + [(PROPOSED, evaluation.forecasts())])


def run_pipeline(series: TimeSeries, config: RunConfig | None = None,
                 references: Sequence[tuple[str, TimeSeries]] | None = None) -> PipelineResult:
    """Partition, fuzzify, model, evaluate and (with references) compare."""
    config = config or RunConfig()
    base, partition = build_partition(config, series)
    fuzzified = fuzzify_series(partition, series, config.boundary_mode)
    model = build_flrg_model(fuzzified, config.order_k, config.series_direction)
    table = build_defuzz_table(partition)
    evaluation = evaluate(series, partition, table, fuzzified)
    comparison = None
    if references is not None:
        comparison = compare_with_references(evaluation, series, references)
    return PipelineResult(config, series, base, partition, fuzzified, model, table, evaluation, comparison)
