#!/usr/bin/env python3
"""Random agreement sweep: every fast distance against its brute-force twin.

Covers staircase Hausdorff, formigram interleaving, grid-clustering
interleaving and bottleneck distances on freshly sampled instances, and
reports per-family counts (including how many infinite values were hit).
Disagreements abort with the offending instance printed for replay.
"""

import argparse
import random
import sys
import time

sys.path.insert(0, "tests")

from stairdist import (
    INF,
    bottleneck_distance,
    grid_interleaving_distance,
    hausdorff,
    interleaving_distance,
)
from stairdist.oracle import (
    oracle_formigram_distance,
    oracle_grid_distance,
    oracle_hausdorff,
)
from conftest import (
    ground,
    rand_barcode,
    rand_formigram_pair,
    rand_grid_pair,
    rand_staircase_pair,
)
from test_persistence import oracle_bottleneck


def sweep(name, make, fast, slow, rng, iterations):
    t0 = time.perf_counter()
    infinite = 0
    for i in range(iterations):
        instance = make(rng)
        got = fast(*instance)
        expected = slow(*instance)
        if got != expected:
            print(f"{name}: DISAGREEMENT at iteration {i}")
            print(f"  instance: {instance!r}")
            print(f"  fast={got} slow={expected}")
            sys.exit(1)
        if got == INF:
            infinite += 1
    dt = time.perf_counter() - t0
    print(f"{name:<12} {iterations:>5} instances  {infinite:>4} infinite  {dt:6.2f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--iterations", type=int, default=150)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    sweep(
        "staircase",
        lambda r: rand_staircase_pair(r, "int"),
        hausdorff,
        oracle_hausdorff,
        rng,
        args.iterations,
    )
    sweep(
        "formigram",
        lambda r: rand_formigram_pair(r, ground(r.randint(1, 4)), 5),
        interleaving_distance,
        oracle_formigram_distance,
        rng,
        args.iterations,
    )
    sweep(
        "grid",
        lambda r: rand_grid_pair(r, ground(r.randint(1, 3))),
        grid_interleaving_distance,
        oracle_grid_distance,
        rng,
        args.iterations,
    )
    sweep(
        "bottleneck",
        lambda r: (rand_barcode(r, 4), rand_barcode(r, 4)),
        bottleneck_distance,
        oracle_bottleneck,
        rng,
        args.iterations,
    )
    print("all families agree")


if __name__ == "__main__":
    main()
