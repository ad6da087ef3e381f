"""Breeders: the standard generational breeder and the time-grouped breeder.

In the grouped breeder, selection, crossover and evaluation of offspring all
happen inside each duration group; groups never exchange genetic material
within a generation.  Each group draws from its own RNG stream derived as
mix64(breed_seed, group_index), which makes the result independent of the
worker count.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import ConfigurationError, UsageError
from .grouping import GroupPartition
from .parity import FitnessCaseTable
from .population import Individual, clone, tournament_select_index
from .seeds import mix64
from .timing import TimerMode, timed_evaluate
from .trees import subtree_crossover


@dataclass(frozen=True)
class BreedPlan:
    """Operator rates and selection parameters (ECJ-style Koza defaults)."""

    crossover_prob: float = 0.9
    reproduction_prob: float = 0.1
    tournament_k: int = 7
    elitism: int = 0

    def __post_init__(self):
        if abs(self.crossover_prob + self.reproduction_prob - 1.0) > 1e-12:
            raise ConfigurationError(
                "crossover_prob + reproduction_prob must equal 1")
        if self.elitism < 0:
            raise ConfigurationError("elitism must be >= 0")
        if self.tournament_k < 1:
            raise ConfigurationError("tournament_k must be >= 1")


def _check_evaluated(pop: list[Individual]):
    for i, ind in enumerate(pop):
        if not ind.evaluated:
            raise UsageError(f"individual {i} is not evaluated")


def standard_breed(pop: list[Individual], plan: BreedPlan, rng: random.Random,
                   max_depth: int = 17,
                   parent_log: list | None = None) -> list[Individual]:
    """One generation of standard GP breeding over the whole population.

    Offspring are unevaluated except reproduction copies and elites, which
    keep their parents' cached results.  ``parent_log``, when given, receives
    one tuple of parent indices per offspring slot.
    """
    n = len(pop)
    if n < 2:
        raise UsageError("standard_breed needs a population of >= 2")
    _check_evaluated(pop)
    if plan.elitism > n:
        raise UsageError("elitism exceeds population size")

    offspring: list[Individual] = []
    if plan.elitism:
        ranked = sorted(range(n), key=lambda i: (-pop[i].fitness, i))
        for i in ranked[:plan.elitism]:
            offspring.append(clone(pop[i]))
            if parent_log is not None:
                parent_log.append((i,))

    while len(offspring) < n:
        if rng.random() < plan.crossover_prob:
            p1 = tournament_select_index(pop, plan.tournament_k, rng)
            p2 = tournament_select_index(pop, plan.tournament_k, rng)
            c1, c2 = subtree_crossover(pop[p1].genome, pop[p2].genome, rng,
                                       max_depth=max_depth)
            offspring.append(Individual(c1))
            if parent_log is not None:
                parent_log.append((p1, p2))
            if len(offspring) < n:
                offspring.append(Individual(c2))
                if parent_log is not None:
                    parent_log.append((p1, p2))
        else:
            p = tournament_select_index(pop, plan.tournament_k, rng)
            offspring.append(clone(pop[p]))
            if parent_log is not None:
                parent_log.append((p,))
    return offspring


def _breed_one_group(pop, members_idx, plan, rng, max_depth):
    """Breed one group; returns (offspring, local parent log)."""
    members = [pop[i] for i in members_idx]
    local_log: list = []
    if len(members) == 1:
        # Too small to crossover: the lone member is copied through.
        offspring = [clone(members[0])]
        local_log.append((0,))
    else:
        offspring = standard_breed(members, plan, rng, max_depth, local_log)
    return offspring, local_log


def group_breed(pop: list[Individual], partition: GroupPartition,
                plan: BreedPlan, table: FitnessCaseTable, mode: TimerMode,
                workers: int, rng_seed: int, max_depth: int = 17,
                parent_log: list | None = None) -> list[Individual]:
    """Breed each duration group independently, then evaluate its offspring.

    Returns the concatenated offspring in group order (population size is
    conserved).  ``parent_log`` receives (group_index, global parent indices)
    per offspring.  Results do not depend on ``workers`` under COST_MODEL.
    """
    covered = sorted(i for g in partition.groups for i in g)
    if covered != list(range(len(pop))):
        raise UsageError("partition does not cover the population exactly")
    _check_evaluated(pop)
    if workers < 1:
        raise UsageError(f"workers must be >= 1, got {workers}")

    def run_group(g: int):
        rng = random.Random(mix64(rng_seed, g))
        offspring, local_log = _breed_one_group(
            pop, partition.groups[g], plan, rng, max_depth)
        for ind in offspring:
            timed_evaluate(ind, table, mode)
        return offspring, local_log

    if workers == 1 or partition.num_groups == 1:
        results = [run_group(g) for g in range(partition.num_groups)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_group, range(partition.num_groups)))

    out: list[Individual] = []
    for g, (offspring, local_log) in enumerate(results):
        if parent_log is not None:
            members_idx = partition.groups[g]
            for parents in local_log:
                parent_log.append((g, tuple(members_idx[p] for p in parents)))
        out.extend(offspring)
    return out


def sequential_emulation_breed(pop: list[Individual], num_groups: int,
                               plan: BreedPlan, table: FitnessCaseTable,
                               mode: TimerMode, rng_seed: int,
                               max_depth: int = 17,
                               parent_log: list | None = None) -> list[Individual]:
    """Single-worker emulation of the grouped breeder.

    Sorts the already-evaluated population by duration, partitions it and
    runs group_breed with one worker; under COST_MODEL this is bit-identical
    to the parallel path for any worker count.
    """
    from .grouping import partition_by_time
    from .timing import EvalRecord

    _check_evaluated(pop)
    records = [EvalRecord(i, ind.eval_duration, ind.fitness, ind.size)
               for i, ind in enumerate(pop)]
    partition = partition_by_time(records, num_groups)
    return group_breed(pop, partition, plan, table, mode, workers=1,
                       rng_seed=rng_seed, max_depth=max_depth,
                       parent_log=parent_log)
