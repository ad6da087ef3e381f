"""Even-parity fitness cases and genome evaluation.

The full truth table of the n-bit even-parity function is precomputed and
packed into uint64 bit-columns (case ``c`` lives at bit ``c % 64`` of word
``c // 64``; input bit ``i`` of case ``c`` is ``(c >> i) & 1``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConfigurationError, EvaluationError
from .trees import INPUT_BASE, Node, to_postfix

MIN_BITS = 2
MAX_BITS = 16


def _pack_bits(values: np.ndarray) -> np.ndarray:
    """Pack a 0/1 vector into uint64 words, little-endian within each word."""
    n = len(values)
    n_words = (n + 63) // 64
    padded = np.zeros(n_words * 64, dtype=np.uint64)
    padded[:n] = values
    shifts = np.arange(64, dtype=np.uint64)
    return (padded.reshape(n_words, 64) << shifts).sum(axis=1, dtype=np.uint64)


@dataclass(frozen=True)
class FitnessCaseTable:
    """Packed truth table for n-bit even parity."""

    num_bits: int
    n_cases: int
    inputs: np.ndarray   # (num_bits, n_words) uint64
    targets: np.ndarray  # (n_words,) uint64
    mask: np.ndarray     # (n_words,) uint64, valid-case bits set

    def case(self, c: int) -> tuple[tuple[int, ...], int]:
        """Unpacked case ``c``: (input bits, parity target). Test convenience."""
        bits = tuple((c >> i) & 1 for i in range(self.num_bits))
        target = int((int(self.targets[c // 64]) >> (c % 64)) & 1)
        return bits, target


def build_case_table(num_bits: int) -> FitnessCaseTable:
    """All 2^num_bits assignments with even-parity targets."""
    if not (MIN_BITS <= num_bits <= MAX_BITS):
        raise ConfigurationError(
            f"num_bits must be in [{MIN_BITS}, {MAX_BITS}], got {num_bits}")
    n_cases = 1 << num_bits
    cases = np.arange(n_cases, dtype=np.uint64)
    inputs = np.stack([
        _pack_bits((cases >> np.uint64(i)) & np.uint64(1))
        for i in range(num_bits)
    ])
    targets = _pack_bits((np.bitwise_count(cases) % 2 == 0).astype(np.uint64))
    mask = _pack_bits(np.ones(n_cases, dtype=np.uint64))
    return FitnessCaseTable(num_bits, n_cases, inputs, targets, mask)


def evaluate_postfix(prog: np.ndarray, table: FitnessCaseTable) -> int:
    """Fitness of a flattened program: number of matching truth-table rows."""
    max_op = int(prog.max())
    if max_op >= INPUT_BASE + table.num_bits:
        raise EvaluationError(
            f"input index {max_op - INPUT_BASE} out of range for "
            f"{table.num_bits}-bit problem")
    return int(kernels.eval_fitness(prog, table.inputs, table.targets, table.mask))


def evaluate(genome: Node, table: FitnessCaseTable) -> int:
    """Fitness of a program tree (0 .. 2^num_bits, maximizing)."""
    return evaluate_postfix(to_postfix(genome), table)
