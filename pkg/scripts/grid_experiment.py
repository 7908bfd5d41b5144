#!/usr/bin/env python3
"""Grid experiments around the corner-cutting adversary.

The shipped guarantee (see the acceptance suite) is that from distance >= 6
to the closest exit the corner cutter beats every fugitive line.  The
converse direction - that a fugitive starting within distance 5 always
escapes - is an open experiment, not a guarantee; this script probes it:

* sweep starting distances on an n x n grid and report who wins against the
  corner-cutting script (best response over all fugitive lines);
* optionally check that near-boundary starts still lack an escape-tree
  certificate (the win, when it happens, is not tree-certified).

Usage:
    python scripts/grid_experiment.py --size 13
    python scripts/grid_experiment.py --size 9 --tree-check
"""

from __future__ import annotations

import argparse
import sys
import time

from nemesis.exact import BudgetExhausted, SearchConfig, best_response_fugitive
from nemesis.fast import find_escape_tree_near
from nemesis.reductions import corner_cut_script, grid_instance


def sweep(size: int, budget: int) -> None:
    center = (size - 1) // 2
    print(f"{size}x{size} grid vs corner-cutting adversary (budget {budget:,} nodes)")
    print(f"{'start':>10} {'boundary':>9} {'exit':>5} {'winner':>10} {'nodes':>9} {'secs':>6}")
    for row in range(center, -1, -1):
        start = (row, center)
        boundary_dist = min(row, size - 1 - row, center, size - 1 - center)
        grid = grid_instance(size, size, start=start)
        script = corner_cut_script(grid)
        t0 = time.time()
        verdict = best_response_fugitive(grid, script, SearchConfig(node_budget=budget))
        print(
            f"{str(start):>10} {boundary_dist:>9} {boundary_dist + 1:>5}"
            f" {verdict.winner:>10} {verdict.nodes:>9} {time.time() - t0:>6.1f}"
        )


def tree_check(size: int, budget: int) -> None:
    """Distance-5 starts win, yet no escape tree sits within distance 1."""
    center = (size - 1) // 2
    row = max(0, 4)  # boundary distance 4 = exit distance 5
    grid = grid_instance(size, size, start=(row, center))
    print(f"escape-tree certificate near start {(row, center)} (exit distance 5)?")
    try:
        tree = find_escape_tree_near(grid, node_budget=budget)
    except BudgetExhausted:
        print(f"  search budget ({budget:,} nodes) exhausted without a certificate")
        return
    if tree is None:
        print("  none: the win against the corner cutter is not tree-certified")
    else:
        print(f"  found one rooted at {tree.root} (unexpected on interior starts)")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=13)
    parser.add_argument("--budget", type=int, default=10**7)
    parser.add_argument("--tree-check", action="store_true")
    args = parser.parse_args()
    sweep(args.size, args.budget)
    if args.tree_check:
        tree_check(args.size, args.budget)
    return 0


if __name__ == "__main__":
    sys.exit(main())
