import random

import numpy as np
import pytest

from oracles import brute_fitness, eval_node
from timegp.errors import ConfigurationError, EvaluationError
from timegp.kernels import eval_fitness_numba, eval_fitness_numpy
from timegp.parity import build_case_table, evaluate
from timegp.trees import (NOR, Node, grow_tree, input_op, to_postfix,
                          tree_size)


def test_two_bit_truth_table():
    table = build_case_table(2)
    expected = {(0, 0): 1, (1, 0): 0, (0, 1): 0, (1, 1): 1}
    for c in range(4):
        bits, target = table.case(c)
        assert expected[bits] == target


def test_twelve_bit_case_count():
    table = build_case_table(12)
    assert table.n_cases == 4096


def test_three_bit_even_targets():
    table = build_case_table(3)
    ones = sum(table.case(c)[1] for c in range(8))
    assert ones == 4  # popcounts 0 and 2


@pytest.mark.parametrize("bad", [1, 17, 0, -3])
def test_bits_out_of_range(bad):
    with pytest.raises(ConfigurationError):
        build_case_table(bad)


def test_evaluate_input0_two_bits():
    table = build_case_table(2)
    assert evaluate(Node(input_op(0)), table) == 2


def test_evaluate_nor_two_bits():
    table = build_case_table(2)
    t = Node(NOR, [Node(input_op(0)), Node(input_op(1))])
    assert evaluate(t, table) == 3


def test_input_index_out_of_range():
    table = build_case_table(2)
    with pytest.raises(EvaluationError):
        evaluate(Node(input_op(2)), table)


@pytest.mark.parametrize("bits", [2, 3, 4])
def test_matches_brute_force_oracle(bits):
    table = build_case_table(bits)
    rng = random.Random(bits)
    for _ in range(300):
        t = grow_tree(rng.randint(0, 5), bits, rng)
        fit = evaluate(t, table)
        assert fit == brute_fitness(t, bits)
        assert 0 <= fit <= 2 ** bits


def test_node_visits_equal_size_times_cases():
    # The work model behind the cost timer: every node visited on every case.
    rng = random.Random(7)
    for bits in (2, 3):
        for _ in range(20):
            t = grow_tree(4, bits, rng)
            counter = [0]
            brute_fitness(t, bits, counter)
            assert counter[0] == tree_size(t) * (1 << bits)


@pytest.mark.skipif(eval_fitness_numba is None, reason="numba kernel inactive")
@pytest.mark.parametrize("bits", [2, 5, 8])
def test_kernel_backends_agree(bits):
    table = build_case_table(bits)
    rng = random.Random(bits)
    for _ in range(100):
        prog = to_postfix(grow_tree(rng.randint(0, 6), bits, rng))
        args = (prog, table.inputs, table.targets, table.mask)
        assert eval_fitness_numba(*args) == eval_fitness_numpy(*args)


def test_large_table_packing():
    # >64 cases exercises multi-word packing.
    table = build_case_table(8)
    assert table.inputs.shape == (8, 4)
    # x0 is set on every odd case: 128 of 256, and parity target count is 128
    assert int(np.bitwise_count(table.inputs[0]).sum()) == 128
    assert int(np.bitwise_count(table.targets & table.mask).sum()) == 128


def test_deep_case_accessor_matches_oracle():
    table = build_case_table(5)
    for c in range(32):
        bits, target = table.case(c)
        assert target == (1 if bin(c).count("1") % 2 == 0 else 0)
        assert bits == tuple((c >> i) & 1 for i in range(5))


def test_eval_node_oracle_sanity():
    # the oracle itself on a hand-checked tree: nor(x0, x1) on (0,0) is 1
    t = Node(NOR, [Node(input_op(0)), Node(input_op(1))])
    assert eval_node(t, [0, 0]) == 1
    assert eval_node(t, [1, 0]) == 0
