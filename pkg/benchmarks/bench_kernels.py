"""Benchmark the numba kernel against the pure-numpy fallback.

Usage: python benchmarks/bench_kernels.py [--bits N] [--repeats R]

Generates random programs in several size bands and times both back-ends
on the same flattened programs.  The numba kernel is warmed up before
timing so JIT compilation is excluded.
"""

import argparse
import random
import time

from timegp.kernels import eval_fitness_numba, eval_fitness_numpy
from timegp.parity import build_case_table
from timegp.trees import full_tree, to_postfix, tree_size


def time_backend(fn, progs, table, repeats):
    start = time.perf_counter()
    for _ in range(repeats):
        for prog in progs:
            fn(prog, table.inputs, table.targets, table.mask)
    return (time.perf_counter() - start) / (repeats * len(progs))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--bits", type=int, default=10)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    table = build_case_table(args.bits)
    rng = random.Random(0)

    print(f"{args.bits}-bit parity, {table.n_cases} cases, "
          f"{args.repeats} repeats per program")
    print(f"{'depth':>6} {'avg size':>9} {'numpy us':>10} {'numba us':>10} "
          f"{'speedup':>8}")
    for depth in (3, 5, 7, 9, 11):
        trees = [full_tree(depth, args.bits, rng) for _ in range(20)]
        progs = [to_postfix(t) for t in trees]
        avg_size = sum(tree_size(t) for t in trees) / len(trees)
        t_np = time_backend(eval_fitness_numpy, progs, table, args.repeats)
        if eval_fitness_numba is not None:
            eval_fitness_numba(progs[0], table.inputs, table.targets,
                               table.mask)  # warm-up
            t_nb = time_backend(eval_fitness_numba, progs, table, args.repeats)
            print(f"{depth:>6} {avg_size:>9.1f} {t_np * 1e6:>10.2f} "
                  f"{t_nb * 1e6:>10.2f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{depth:>6} {avg_size:>9.1f} {t_np * 1e6:>10.2f} "
                  f"{'n/a':>10} {'n/a':>8}")


if __name__ == "__main__":
    main()
