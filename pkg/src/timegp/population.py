"""Individuals and tournament selection."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import UsageError
from .trees import Node, copy_tree, tree_size


@dataclass
class Individual:
    """A genome plus cached evaluation results.

    ``evaluated`` implies fitness, eval_duration and size are set.
    """

    genome: Node
    fitness: int | None = None
    eval_duration: int | None = None
    size: int = field(default=0)
    evaluated: bool = False

    def __post_init__(self):
        if self.size == 0:
            self.size = tree_size(self.genome)


def clone(ind: Individual) -> Individual:
    """Copy an individual, keeping cached evaluation results (no re-eval)."""
    return Individual(genome=copy_tree(ind.genome), fitness=ind.fitness,
                      eval_duration=ind.eval_duration, size=ind.size,
                      evaluated=ind.evaluated)


def tournament_select_index(population: list[Individual], k: int,
                            rng: random.Random) -> int:
    """Index of the winner of a size-k tournament (ties: first sampled wins)."""
    if not population:
        raise UsageError("tournament over empty population")
    if k < 1:
        raise UsageError(f"tournament size must be >= 1, got {k}")
    best = rng.randrange(len(population))
    for _ in range(k - 1):
        i = rng.randrange(len(population))
        if population[i].fitness > population[best].fitness:
            best = i
    return best


def tournament_select(population: list[Individual], k: int,
                      rng: random.Random) -> Individual:
    """Best-of-k tournament with replacement."""
    return population[tournament_select_index(population, k, rng)]
