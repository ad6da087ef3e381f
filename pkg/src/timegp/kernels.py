"""Hot fitness-evaluation kernels.

Programs are postorder opcode arrays (see trees.to_postfix).  Case outputs
are held as packed uint64 bit-columns, so each node of the program costs
one bitwise op per 64 fitness cases.  Two interchangeable back-ends exist:

* a numba ``@njit`` kernel (default when numba imports cleanly), and
* a pure-numpy fallback.

Set ``TIMEGP_NO_NUMBA=1`` to force the numpy path.  Both back-ends are
exact boolean arithmetic and return identical fitness values.
"""

from __future__ import annotations

import os

import numpy as np

from .trees import INPUT_BASE, AND, OR, NAND, NOR


def eval_fitness_numpy(prog: np.ndarray, inputs: np.ndarray,
                       target: np.ndarray, mask: np.ndarray) -> int:
    """Evaluate a postfix program over packed cases; return #matching cases.

    ``inputs`` is (num_bits, n_words) uint64, ``target``/``mask`` are
    (n_words,) uint64.  ``mask`` clears padding bits in the last word.
    """
    stack = [None] * len(prog)
    sp = 0
    for op in prog:
        if op >= INPUT_BASE:
            stack[sp] = inputs[op - INPUT_BASE]
            sp += 1
        else:
            sp -= 1
            b = stack[sp]
            a = stack[sp - 1]
            if op == AND:
                r = a & b
            elif op == OR:
                r = a | b
            elif op == NAND:
                r = ~(a & b)
            else:
                r = ~(a | b)
            stack[sp - 1] = r
    agree = ~(stack[0] ^ target) & mask
    return int(np.bitwise_count(agree).sum())


_numba_disabled = os.environ.get("TIMEGP_NO_NUMBA", "").lower() in ("1", "true", "yes")
eval_fitness_numba = None

if not _numba_disabled:
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is an optional extra
        numba = None

    if numba is not None:
        _M1 = np.uint64(0x5555555555555555)
        _M2 = np.uint64(0x3333333333333333)
        _M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
        _H01 = np.uint64(0x0101010101010101)

        @numba.njit(cache=True)
        def eval_fitness_numba(prog, inputs, target, mask):  # noqa: F811
            n_words = inputs.shape[1]
            stack = np.empty((prog.shape[0] + 1, n_words), dtype=np.uint64)
            sp = 0
            for i in range(prog.shape[0]):
                op = prog[i]
                if op >= 4:
                    row = op - 4
                    for w in range(n_words):
                        stack[sp, w] = inputs[row, w]
                    sp += 1
                else:
                    sp -= 1
                    for w in range(n_words):
                        a = stack[sp - 1, w]
                        b = stack[sp, w]
                        if op == 0:
                            r = a & b
                        elif op == 1:
                            r = a | b
                        elif op == 2:
                            r = ~(a & b)
                        else:
                            r = ~(a | b)
                        stack[sp - 1, w] = r
            total = 0
            for w in range(n_words):
                x = (~(stack[0, w] ^ target[w])) & mask[w]
                x = x - ((x >> np.uint64(1)) & _M1)
                x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
                x = (x + (x >> np.uint64(4))) & _M4
                total += int((x * _H01) >> np.uint64(56))
            return total


def using_numba() -> bool:
    """True when the jitted kernel is active."""
    return eval_fitness_numba is not None


if using_numba():
    eval_fitness = eval_fitness_numba
else:
    eval_fitness = eval_fitness_numpy
