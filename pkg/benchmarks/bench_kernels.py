#!/usr/bin/env python3
"""Benchmark the compiled betweenness kernels against the pure-Python fallback.

Both engines are imported directly (no env juggling) and run on the same
seeded random graph. The default size keeps the pure engine affordable; use
--full for the desk-scale 2000-node / 10000-edge configuration (the pure
engine will take a while there).

Usage:
    python benchmarks/bench_kernels.py [--nodes N] [--edges M] [--trials T] [--full]
"""

import argparse
import random
import time

import numpy as np

from qagraph import Graph, louvain
from qagraph._kernels import COMPILED, build_connection_csr, pure

if COMPILED:
    from qagraph._kernels import _cext


def random_graph(n, m, seed):
    rng = random.Random(seed)
    g = Graph(directed=False)
    for v in range(n):
        g.add_node(v)
    seen = set()
    while len(seen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or (min(u, v), max(u, v)) in seen:
            continue
        seen.add((min(u, v), max(u, v)))
        g.add_edge(min(u, v), max(u, v))
    return g


def run_engine(impl, csr, trials):
    best = float("inf")
    result = None
    for _ in range(trials):
        node_out = np.zeros(csr.n)
        edge_out = np.zeros(len(csr.pairs))
        start = time.perf_counter()
        impl.betweenness_bfs(csr.indptr, csr.indices, csr.eids,
                             csr.rindptr, csr.rindices, csr.reids,
                             node_out, edge_out)
        best = min(best, time.perf_counter() - start)
        result = node_out
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=600)
    parser.add_argument("--edges", type=int, default=3000)
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--full", action="store_true",
                        help="use the 2000-node / 10000-edge configuration")
    args = parser.parse_args()
    n, m = (2000, 10000) if args.full else (args.nodes, args.edges)

    print(f"graph: n={n} m={m} seed={args.seed}")
    g = random_graph(n, m, args.seed)
    csr = build_connection_csr(g)

    t_pure, r_pure = run_engine(pure, csr, max(1, args.trials if not args.full else 1))
    print(f"pure betweenness:     {t_pure:8.3f} s")
    if COMPILED:
        t_ext, r_ext = run_engine(_cext, csr, args.trials)
        print(f"compiled betweenness: {t_ext:8.3f} s   ({t_pure / t_ext:6.1f}x speedup)")
        diff = float(np.abs(r_pure - r_ext).max())
        print(f"max |pure - compiled|: {diff:.3e}")
    else:
        print("compiled extension not built; only the pure engine was timed")

    start = time.perf_counter()
    part = louvain(g, seed=args.seed)
    print(f"louvain (shared impl): {time.perf_counter() - start:7.3f} s, "
          f"Q={part.modularity:.4f}, "
          f"{len(set(part.assignment.values()))} communities")


if __name__ == "__main__":
    main()
