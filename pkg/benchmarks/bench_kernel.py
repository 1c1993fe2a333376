#!/usr/bin/env python3
"""Times the compiled enumeration kernels against their pure-Python
twins on the workloads the oracle actually runs: undirected relation
masks and rooted arc masks over every tree topology at a given leaf
count.

Usage: python3 benchmarks/bench_kernel.py [--leaves N] [--repeat R]
"""

import argparse
import statistics
import sys
import time

from exact2rel import enumerate_topologies
from exact2rel.oracle import _prepare

try:
    from exact2rel import _speedups
except ImportError:
    _speedups = None
from exact2rel import _speedups_py


def run_relation(impl, shapes, k, zero_discrete):
    total = 0
    for shape in shapes:
        total += len(impl.enumerate_relation_masks(
            len(shape.paths), shape.paths, shape.min_w_canonical,
            k + 1, k, zero_discrete))
    return total


def run_rooted(impl, shapes, n, k):
    total = 0
    for shape in shapes:
        total += len(impl.enumerate_rooted_arc_masks(
            n, shape.pair_index, shape.paths, shape.min_w_canonical,
            k + 1, k, False, True, shape.interior_roots, shape.edge_roots))
    return total


def time_one(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        samples.append(time.perf_counter() - t0)
    return result, min(samples), statistics.median(samples)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--leaves", type=int, default=5)
    ap.add_argument("--rooted-leaves", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _speedups is None:
        print("compiled extension not built; only the pure kernel runs",
              file=sys.stderr)

    shapes = [_prepare(t) for t in enumerate_topologies(args.leaves)]
    rshapes = [_prepare(t) for t in enumerate_topologies(args.rooted_leaves)]
    print(f"{len(shapes)} topologies at {args.leaves} leaves, "
          f"{len(rshapes)} at {args.rooted_leaves} (rooted); "
          f"best of {args.repeat}\n")

    jobs = [
        ("relation masks, k=2",
         lambda impl: run_relation(impl, shapes, 2, False)),
        ("relation masks, k=2, zero-discrete",
         lambda impl: run_relation(impl, shapes, 2, True)),
        ("rooted arc masks, k=2",
         lambda impl: run_rooted(impl, rshapes, args.rooted_leaves, 2)),
    ]
    for label, job in jobs:
        row = [label.ljust(38)]
        pure_result, pure_best, _ = time_one(lambda: job(_speedups_py),
                                             args.repeat)
        row.append(f"pure {pure_best:8.3f}s")
        if _speedups is not None:
            fast_result, fast_best, _ = time_one(lambda: job(_speedups),
                                                 args.repeat)
            if fast_result != pure_result:
                sys.exit(f"kernel mismatch on {label!r}: "
                         f"{fast_result} != {pure_result}")
            row.append(f"compiled {fast_best:8.3f}s")
            row.append(f"speedup {pure_best / fast_best:5.1f}x")
        print("  ".join(row))


if __name__ == "__main__":
    main()
