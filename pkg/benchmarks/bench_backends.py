#!/usr/bin/env python3
"""Benchmark the jit kernels against the pure-numpy fallbacks.

Runs every hot kernel under both backends (same inputs, results checked
equal) and prints a timing table. Usage:

    python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import os
import time

import numpy as np

from lrftrees import _backend, _kernels
from lrftrees.search import brute_force_census
from lrftrees.trees import build_from_parent_list


def census_workload():
    # bushy 18-vertex tree: 2**18 colorings against its maximal paths
    parents = [None, 0, 0, 1, 1, 2, 2, 3, 4, 5, 6, 7, 7, 8, 9, 10, 11, 13]
    tree = build_from_parent_list(parents)
    return brute_force_census(tree, 2)


WORKLOADS = [
    ("palindrome mask, length 22", lambda: _kernels.palindrome_free_mask(22).sum()),
    ("square mask, length 20", lambda: _kernels.square_free_mask(20).sum()),
    ("abxba sweep, |x| <= 18", lambda: sum(
        _kernels.abxba_counterexamples(n).size for n in range(19)
    )),
    ("base-3 square table, length 12", lambda: _kernels.base_square_table(12, 3).sum()),
    ("coloring census, 18 vertices", census_workload),
]


def _time_best(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run(repeats: int) -> None:
    backends = ["numpy"] + (["numba"] if _backend.HAVE_NUMBA else [])
    results = {}
    for name, fn in WORKLOADS:
        for backend in backends:
            os.environ[_backend.ENV_VAR] = backend
            value = fn()  # warm up: jit compile / cache load, page in
            results[(name, backend)] = (_time_best(fn, repeats), value)
    os.environ.pop(_backend.ENV_VAR, None)

    width = max(len(name) for name, _ in WORKLOADS)
    header = f"{'workload'.ljust(width)}  {'numpy':>10}"
    if "numba" in backends:
        header += f"  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, _ in WORKLOADS:
        np_time, np_value = results[(name, "numpy")]
        line = f"{name.ljust(width)}  {np_time * 1e3:9.1f}ms"
        if "numba" in backends:
            nb_time, nb_value = results[(name, "numba")]
            if np_value != nb_value:
                raise SystemExit(f"backend mismatch on {name}: {np_value} vs {nb_value}")
            line += f"  {nb_time * 1e3:9.1f}ms  {np_time / nb_time:7.1f}x"
        print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    run(args.repeats)


if __name__ == "__main__":
    main()
