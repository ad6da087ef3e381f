import random

import pytest

from timegp.parity import build_case_table
from timegp.population import Individual
from timegp.timing import TimerMode, evaluate_population
from timegp.trees import ramped_half_and_half


@pytest.fixture(scope="session")
def table4():
    return build_case_table(4)


def make_evaluated_population(num_bits, size, seed, depth_range=(2, 4)):
    """Random evaluated population under the cost-model timer."""
    rng = random.Random(seed)
    trees = ramped_half_and_half(size, depth_range, num_bits, rng)
    pop = [Individual(t) for t in trees]
    table = build_case_table(num_bits)
    evaluate_population(pop, table, TimerMode.COST_MODEL)
    return pop, table
