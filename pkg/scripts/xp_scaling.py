#!/usr/bin/env python3
"""Measure how the compressed solver scales with host size.

For a fixed anchor size the compressed graph has C(n, mu) nodes, so build
time should grow polynomially in n while the explicit reconfiguration graph
can grow with the number of pattern copies.  This script times both builders
on random hosts and prints a table; nothing is asserted, the numbers are for
reading.
"""

import argparse
import random
import statistics
import sys
import time

from isisor.bruteforce import build_reconfig_graph
from isisor.graphs import Graph, disjoint_union, complete_graph, empty_graph
from isisor.rules import Rule
from isisor.xp import build_compressed


PATTERNS = {
    "2K1": empty_graph(2),
    "3K1": empty_graph(3),
    "K1+K2": disjoint_union([complete_graph(1), complete_graph(2)])[0].with_labels(None),
    "4K1": empty_graph(4),
}


def random_host(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pattern", choices=sorted(PATTERNS), default="3K1")
    parser.add_argument("--mu", type=int, default=1, help="anchor size")
    parser.add_argument("--min-n", type=int, default=6)
    parser.add_argument("--max-n", type=int, default=14)
    parser.add_argument("--trials", type=int, default=3, help="hosts per size")
    parser.add_argument("--density", type=float, default=0.3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args(argv)

    h = PATTERNS[args.pattern]
    if not 1 <= args.mu < h.n:
        parser.error(f"--mu must be within 1..{h.n - 1} for pattern {args.pattern}")
    rule = Rule("jump", h.n - args.mu)
    rng = random.Random(args.seed)

    print(f"pattern {args.pattern}, mu {args.mu}, rule jump {rule.k}, "
          f"density {args.density}, {args.trials} hosts per size")
    print(f"{'n':>4} {'anchors':>8} {'copies':>8} {'compressed-s':>13} {'explicit-s':>11}")
    for n in range(args.min_n, args.max_n + 1):
        compressed_times = []
        explicit_times = []
        anchors = copies = 0
        for _ in range(args.trials):
            g = random_host(rng, n, args.density)
            t0 = time.perf_counter()
            cg = build_compressed(g, h, args.mu, workers=args.workers)
            compressed_times.append(time.perf_counter() - t0)
            t0 = time.perf_counter()
            rg = build_reconfig_graph(g, h, rule)
            explicit_times.append(time.perf_counter() - t0)
            anchors = len(cg.nodes)
            copies = max(copies, len(rg.nodes))
        print(
            f"{n:>4} {anchors:>8} {copies:>8}"
            f" {statistics.median(compressed_times):>13.4f}"
            f" {statistics.median(explicit_times):>11.4f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
