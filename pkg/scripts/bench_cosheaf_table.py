#!/usr/bin/env python3
"""Timing sweep for the run-join table behind the formigram distances.

Builds random formigrams across a grid of (ground size n, critical points m)
and reports build time next to the n^2 m^2 budget, normalized at the
smallest configuration.  The table does O(m^2) pairwise joins, each O(n)
with the star-edge union-find, so measured growth should sit well inside
the quadratic-in-both budget.
"""

import argparse
import random
import time
from fractions import Fraction

from stairdist import Formigram, GroundSet
from stairdist.formigram import CosheafTable

import sys

sys.path.insert(0, "tests")
from conftest import rand_subpartition  # noqa: E402


def bench_formigram(rng, n, m):
    g = GroundSet(tuple(f"v{i}" for i in range(n)))
    crit = tuple(Fraction(i) for i in range(m))
    intervals = [rand_subpartition(rng, g) for _ in range(m + 1)]
    values = [intervals[0]]
    for k in range(m):
        values.append(intervals[k].join(intervals[k + 1]))
        values.append(intervals[k + 1])
    return Formigram(g, crit, tuple(values))


def build_time(rng, n, m, repeats):
    f = bench_formigram(rng, n, m)
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        CosheafTable(f)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument(
        "--sizes",
        default="10x10,10x40,40x10,20x20,40x40",
        help="comma-separated NxM configurations",
    )
    args = ap.parse_args()
    rng = random.Random(args.seed)
    sizes = [tuple(int(v) for v in s.split("x")) for s in args.sizes.split(",")]

    base_n, base_m = sizes[0]
    base = build_time(rng, base_n, base_m, args.repeats)
    unit = base / (base_n**2 * base_m**2)
    print(f"{'n':>4} {'m':>4} {'seconds':>10} {'n^2m^2 budget':>14} {'ratio':>6}")
    for n, m in sizes:
        t = build_time(rng, n, m, args.repeats)
        budget = unit * n**2 * m**2
        print(f"{n:>4} {m:>4} {t:>10.4f} {budget:>14.4f} {t / budget:>6.2f}")


if __name__ == "__main__":
    main()
