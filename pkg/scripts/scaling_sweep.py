#!/usr/bin/env python3
"""Measure solver wall time on the bounded-width ladder family.

The ladder keeps the vertex interval-membership width constant while the
arc count grows, so solve time should grow near-linearly with size.
Prints one record per (size, repeat) plus per-decade growth factors.

Usage: python scripts/scaling_sweep.py [--sizes 1000,10000,100000]
       [--delta 1] [--repeats 3] [--json]
"""

import argparse
import gc
import json
import time

from restless_reach import gen_ladder, solve_unit, vertex_im_width


def timed_solve(graph, delta):
    gc.collect()
    gc.disable()
    try:
        start = time.perf_counter()
        result = solve_unit(graph, 0, delta)
        return time.perf_counter() - start, result
    finally:
        gc.enable()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="1000,10000,100000")
    parser.add_argument("--delta", type=int, default=1)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    best_per_size = []
    for size in (int(tok) for tok in args.sizes.split(",")):
        k = max(2, (size + 4) // 6)
        graph = gen_ladder(k)
        width = vertex_im_width(graph)
        best = float("inf")
        for repeat in range(args.repeats):
            elapsed, result = timed_solve(graph, args.delta)
            best = min(best, elapsed)
            record = {
                "instance": f"ladder k={k}",
                "n": graph.n,
                "m": len(graph.arcs),
                "k": width,
                "delta": args.delta,
                "wall_s": round(elapsed, 6),
                "peak_entries": result.stats.peak_entries,
                "reachable": sum(result.reachable),
                "repeat": repeat,
            }
            if args.json:
                print(json.dumps(record))
            else:
                print(f"ladder k={k:<7} M={record['m']:<8} width={width} "
                      f"time={elapsed * 1e3:8.2f} ms  reach={record['reachable']}")
        best_per_size.append((len(graph.arcs), best))

    if not args.json and len(best_per_size) > 1:
        print()
        for (m0, t0), (m1, t1) in zip(best_per_size, best_per_size[1:]):
            print(f"M {m0} -> {m1}: size x{m1 / m0:.1f}, time x{t1 / t0:.1f}")


if __name__ == "__main__":
    main()
