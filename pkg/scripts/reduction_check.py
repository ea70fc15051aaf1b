#!/usr/bin/env python3
"""Sample both hardness gadgets and cross-check them against brute force.

For random exact (3,4) formulas: a 1-restless source-to-target path in the
SAT gadget must exist iff the formula is satisfiable.  For random
subset-sum instances: a 0-restless path in the expanded interval gadget
must exist iff some subset hits the target.

Usage: python scripts/reduction_check.py [--samples 50] [--seed 0]
"""

import argparse
import random

from restless_reach import (
    SubsetSumInstance,
    expand_interval_to_point,
    gen_random_34sat,
    gen_sat_instance,
    gen_subset_sum_instance,
    sat_bruteforce,
    solve_general,
    solve_unit,
    subset_sum_bruteforce,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    mismatches = 0
    sat_yes = 0
    for i in range(args.samples):
        n = rng.choice([3, 6, 9])
        formula = gen_random_34sat(n, seed=rng.randrange(2**32))
        inst = gen_sat_instance(formula)
        reached = solve_unit(inst.graph, inst.s, inst.delta_max).reachable[inst.t]
        expected = sat_bruteforce(formula)
        sat_yes += expected
        if reached != expected:
            mismatches += 1
            print(f"SAT MISMATCH sample={i} n={n}: gadget={reached} brute={expected}")
    print(f"sat gadget: {args.samples} samples, {sat_yes} satisfiable, "
          f"{mismatches} mismatches")

    ss_mismatches = 0
    ss_yes = 0
    for i in range(args.samples):
        n = rng.randint(1, 5)
        xs = [rng.randint(1, 5) for _ in range(n)]
        target = rng.randint(1, sum(xs))
        inst = gen_subset_sum_instance(SubsetSumInstance(xs, target))
        expanded = expand_interval_to_point(inst.graph)
        reached = solve_general(expanded, inst.s, 0).reachable[inst.t]
        expected = subset_sum_bruteforce(xs, target)
        ss_yes += expected
        if reached != expected:
            ss_mismatches += 1
            print(f"SUBSET-SUM MISMATCH sample={i} xs={xs} X={target}: "
                  f"gadget={reached} brute={expected}")
    print(f"subset-sum gadget: {args.samples} samples, {ss_yes} solvable, "
          f"{ss_mismatches} mismatches")

    raise SystemExit(1 if mismatches or ss_mismatches else 0)


if __name__ == "__main__":
    main()
