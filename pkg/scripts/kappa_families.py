#!/usr/bin/env python3
"""Tabulate click-class counts for standard graph families, three ways.

Usage:
    python scripts/kappa_families.py [--max-cycle N] [--max-complete N]

Each row shows the brute-force count, the deletion/contraction recursion,
and the Tutte evaluation at (1, 0); the script exits nonzero if any row
disagrees.
"""

import argparse
import sys
import time

from kappatools.corpus import complete_graph, cycle_graph
from kappatools.graphs import Multigraph
from kappatools.kappa import kappa
from kappatools.orientations import kappa_partition_bruteforce
from kappatools.tutte import tutte_eval


def wheel_graph(n):
    """Hub vertex 0 joined to every rim vertex of a cycle on 1..n-1."""
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    spokes = [(0, i) for i in range(1, n)]
    return Multigraph(n, tuple(spokes + rim))


def complete_bipartite(a, b):
    return Multigraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def rows(max_cycle, max_complete):
    for n in range(3, max_cycle + 1):
        yield f"C{n}", cycle_graph(n)
    for n in range(2, max_complete + 1):
        yield f"K{n}", complete_graph(n)
    for n in range(4, 8):
        yield f"W{n}", wheel_graph(n)
    for a, b in ((2, 2), (2, 3), (3, 3)):
        yield f"K{a},{b}", complete_bipartite(a, b)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-cycle", type=int, default=10)
    parser.add_argument("--max-complete", type=int, default=6)
    args = parser.parse_args()

    print(f"{'graph':>7} {'n':>3} {'m':>3} {'brute':>7} {'recur':>7} {'T(1,0)':>7} {'time':>8}")
    bad = 0
    for name, g in rows(args.max_cycle, args.max_complete):
        start = time.perf_counter()
        brute = kappa_partition_bruteforce(g).class_count if g.m <= 16 else None
        recur = kappa(g).value
        tutte = tutte_eval(g, 1, 0)
        elapsed = time.perf_counter() - start
        agree = tutte == recur and (brute is None or brute == recur)
        if not agree:
            bad += 1
        print(
            f"{name:>7} {g.n_vertices:>3} {g.m:>3} "
            f"{'-' if brute is None else brute:>7} {recur:>7} {tutte:>7} "
            f"{elapsed:>7.3f}s{'' if agree else '  MISMATCH'}"
        )
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
