"""timegp: tree-based GP with evaluation-time-grouped breeding.

Grouping individuals by measured evaluation duration before selection and
crossover keeps program sizes under control while preserving fitness; this
package implements the grouped breeder, a standard baseline, deterministic
and wall-clock timers, and an experiment harness for even-parity benchmarks.
"""

__version__ = "0.1.0"

from .breeding import (BreedPlan, group_breed, sequential_emulation_breed,
                       standard_breed)
from .engine import (AggregateRow, ExperimentConfig, GenerationStats,
                     RunResult, ScheduleReport, aggregate, run_experiment,
                     run_one, schedule_report)
from .errors import ConfigurationError, EvaluationError, GPError, UsageError
from .grouping import GroupPartition, group_of, partition_by_time
from .parity import FitnessCaseTable, build_case_table, evaluate
from .population import Individual, tournament_select
from .seeds import mix64
from .timing import EvalRecord, TimerMode, evaluate_population, timed_evaluate
from .trees import (Node, ramped_half_and_half, subtree_crossover, tree_depth,
                    tree_size)
