"""Experiment orchestration: generational loop, replication, aggregation.

Seed contract: run r of an experiment uses seed mix64(master_seed, r) for
initialization and mix64(master_seed, r, generation) as the breed seed per
generation; group g inside a generation then derives mix64(breed_seed, g).
Under the cost-model timer every result is a pure function of the config.
"""

from __future__ import annotations

import heapq
import random
import statistics
from dataclasses import dataclass, field, replace

from .breeding import BreedPlan, group_breed
from .errors import ConfigurationError, GPError, UsageError
from .grouping import partition_by_time
from .parity import build_case_table
from .population import Individual
from .seeds import mix64
from .timing import EvalRecord, TimerMode, evaluate_population
from .trees import ramped_half_and_half


@dataclass(frozen=True)
class ExperimentConfig:
    num_bits: int
    population_size: int = 1024
    generations: int = 50
    groups: int = 1
    runs: int = 30
    timer_mode: TimerMode = TimerMode.COST_MODEL
    workers: int = 1
    master_seed: int = 0
    plan: BreedPlan = field(default_factory=BreedPlan)
    init_depth_min: int = 2
    init_depth_max: int = 6
    max_depth: int = 17

    def __post_init__(self):
        if self.groups < 1 or self.groups > self.population_size:
            raise ConfigurationError(
                f"groups must be in [1, {self.population_size}], got {self.groups}")
        if self.runs < 1:
            raise ConfigurationError("runs must be >= 1")
        if self.generations < 1:
            raise ConfigurationError("generations must be >= 1")
        if self.population_size < 2:
            raise ConfigurationError("population_size must be >= 2")
        if self.workers < 1:
            raise ConfigurationError("workers must be >= 1")

    def with_groups(self, groups: int) -> "ExperimentConfig":
        return replace(self, groups=groups)


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    best_fitness: int
    avg_fitness: float
    avg_size: float
    avg_duration: float
    max_size: int


@dataclass(frozen=True)
class RunResult:
    config: ExperimentConfig
    per_generation: list[GenerationStats]
    run_index: int
    seed_used: int


def _stats(generation: int, pop: list[Individual]) -> GenerationStats:
    best = max(ind.fitness for ind in pop)
    avg_fit = sum(ind.fitness for ind in pop) / len(pop)
    avg_size = sum(ind.size for ind in pop) / len(pop)
    avg_dur = sum(ind.eval_duration for ind in pop) / len(pop)
    max_size = max(ind.size for ind in pop)
    assert best >= avg_fit
    return GenerationStats(generation, best, avg_fit, avg_size, avg_dur, max_size)


def run_one(config: ExperimentConfig, run_index: int) -> RunResult:
    """One full run; records stats for generation 0 through `generations`."""
    table = build_case_table(config.num_bits)
    seed_used = mix64(config.master_seed, run_index)
    rng = random.Random(seed_used)
    trees = ramped_half_and_half(
        config.population_size,
        (config.init_depth_min, config.init_depth_max),
        config.num_bits, rng)
    pop = [Individual(t) for t in trees]

    history: list[GenerationStats] = []
    try:
        records = evaluate_population(pop, table, config.timer_mode,
                                      config.workers)
        history.append(_stats(0, pop))
        for gen in range(1, config.generations + 1):
            partition = partition_by_time(records, config.groups)
            breed_seed = mix64(config.master_seed, run_index, gen)
            pop = group_breed(pop, partition, config.plan, table,
                              config.timer_mode, config.workers, breed_seed,
                              config.max_depth)
            records = [EvalRecord(i, ind.eval_duration, ind.fitness, ind.size)
                       for i, ind in enumerate(pop)]
            history.append(_stats(gen, pop))
    except GPError as exc:
        raise type(exc)(f"run {run_index}, generation {len(history)}: {exc}") from exc
    return RunResult(config, history, run_index, seed_used)


def run_experiment(config: ExperimentConfig) -> list[RunResult]:
    """All replicate runs, ordered by run index."""
    return [run_one(config, r) for r in range(config.runs)]


@dataclass(frozen=True)
class AggregateRow:
    generation: int
    best_fitness_mean: float
    best_fitness_sd: float
    avg_fitness_mean: float
    avg_fitness_sd: float
    avg_size_mean: float
    avg_size_sd: float
    avg_duration_mean: float


def _sd(values: list[float]) -> float:
    # Sample (n-1) standard deviation; 0 for a single run.
    return statistics.stdev(values) if len(values) > 1 else 0.0


def aggregate(results: list[RunResult]) -> list[AggregateRow]:
    """Per-generation means and sample SDs across runs."""
    if not results:
        raise UsageError("nothing to aggregate")
    lengths = {len(r.per_generation) for r in results}
    if len(lengths) != 1:
        raise UsageError(f"mixed generation counts: {sorted(lengths)}")
    rows = []
    for g in range(lengths.pop()):
        stats = [r.per_generation[g] for r in results]
        best = [float(s.best_fitness) for s in stats]
        avg_fit = [s.avg_fitness for s in stats]
        avg_size = [s.avg_size for s in stats]
        avg_dur = [s.avg_duration for s in stats]
        rows.append(AggregateRow(
            generation=g,
            best_fitness_mean=statistics.fmean(best),
            best_fitness_sd=_sd(best),
            avg_fitness_mean=statistics.fmean(avg_fit),
            avg_fitness_sd=_sd(avg_fit),
            avg_size_mean=statistics.fmean(avg_size),
            avg_size_sd=_sd(avg_size),
            avg_duration_mean=statistics.fmean(avg_dur),
        ))
    return rows


@dataclass(frozen=True)
class ScheduleReport:
    makespan: int
    busy: list[int]
    utilization: float


def schedule_report(records, workers: int) -> ScheduleReport:
    """Simulate greedy longest-duration-first dispatch (LPT) onto workers.

    ``records`` may be EvalRecords or plain durations.  Report-only; the
    evolutionary loop never consults this.
    """
    if workers < 1:
        raise UsageError(f"workers must be >= 1, got {workers}")
    durations = [getattr(r, "duration", r) for r in records]
    heap = [(0, w) for w in range(workers)]
    heapq.heapify(heap)
    for d in sorted(durations, reverse=True):
        load, w = heapq.heappop(heap)
        heapq.heappush(heap, (load + d, w))
    busy = [0] * workers
    for load, w in heap:
        busy[w] = load
    makespan = max(busy)
    total = sum(busy)
    utilization = total / (makespan * workers) if makespan > 0 else 1.0
    return ScheduleReport(makespan, busy, utilization)
