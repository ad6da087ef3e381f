"""Per-individual evaluation timing: the complexity surrogate.

Two timer back-ends:

* COST_MODEL: duration = tree size * number of fitness cases (exact node-visit
  count, fully deterministic).
* WALL_CLOCK: monotonic elapsed nanoseconds of the evaluate() call.

Evaluation results are cached on the individual; an already-evaluated
individual is never re-measured.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import GPError, UsageError
from .parity import FitnessCaseTable, evaluate_postfix
from .population import Individual
from .trees import to_postfix


class TimerMode(enum.Enum):
    WALL_CLOCK = "wall"
    COST_MODEL = "cost"


@dataclass(frozen=True)
class EvalRecord:
    individual_index: int
    duration: int
    fitness: int
    size: int


def timed_evaluate(ind: Individual, table: FitnessCaseTable, mode: TimerMode,
                   index: int = 0) -> EvalRecord:
    """Evaluate and time one individual; cached results are returned as-is."""
    if not ind.evaluated:
        prog = to_postfix(ind.genome)
        if mode is TimerMode.WALL_CLOCK:
            start = time.perf_counter_ns()
            fitness = evaluate_postfix(prog, table)
            duration = time.perf_counter_ns() - start
        else:
            fitness = evaluate_postfix(prog, table)
            duration = len(prog) * table.n_cases
        ind.fitness = fitness
        ind.eval_duration = duration
        ind.size = len(prog)
        ind.evaluated = True
    return EvalRecord(index, ind.eval_duration, ind.fitness, ind.size)


def evaluate_population(pop: list[Individual], table: FitnessCaseTable,
                        mode: TimerMode, workers: int = 1) -> list[EvalRecord]:
    """Evaluate all unevaluated individuals; records in population order.

    With workers > 1, unevaluated individuals are dispatched to a thread
    pool; results are position-ordered regardless of completion order.
    """
    if workers < 1:
        raise UsageError(f"workers must be >= 1, got {workers}")
    try:
        if workers == 1 or len(pop) < 2:
            return [timed_evaluate(ind, table, mode, i)
                    for i, ind in enumerate(pop)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(timed_evaluate, ind, table, mode, i)
                       for i, ind in enumerate(pop)]
            return [f.result() for f in futures]
    except GPError as exc:
        failed = next(i for i, ind in enumerate(pop) if not ind.evaluated)
        raise type(exc)(f"individual {failed}: {exc}") from exc
