"""Mean-based partition fuzzy time series forecasting."""
from .dataio import (RunConfig, emit_plot_data, load_bundled_references, load_bundled_series,
                     load_config, load_preset, read_series_csv, write_evaluation_csv)
from .estimator import MeanPartitionFTS
from .exceptions import (DataError, DomainError, InconsistencyError, InsufficientDataError,
                         InvalidArgumentError, MbftsError, NoMatchError, OutOfUniverseError,
                         ParseError)
from .fuzzify import FuzzifiedSeries, fuzzify_series, fuzzify_value, membership_vector
from .metrics import ComparisonReport, EvaluationReport, afer, compare, evaluate, mse
from .model import (DefuzzTable, FlrgModel, build_defuzz_table, build_flrg_model, defuzz_centroid,
                    forecast_next, reconstruct_in_sample)
from .partition import (BasePartition, Partition, Universe, build_base_partition, count_frequencies,
                        refine_partition, suggest_subdivision_counts)
from .pipeline import PipelineResult, run_pipeline
from .series import TimeSeries

__version__ = "0.1.0"
