"""Benchmark the numba component kernel against the pure-Python fallback.

Times the union-find labelling on percolated coupled ER graphs, plus the
surrounding end-to-end replicate (generation + percolation + labelling),
and prints a small comparison table.

Usage:
    python benchmarks/bench_backends.py [--n 200000] [--lam 1.5] [--reps 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cascade import netgen
from cascade.percolate import (
    _component_counts_numba,
    _component_counts_python,
    percolate,
)


def time_call(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=200_000)
    parser.add_argument("--lam", type=float, default=1.5)
    parser.add_argument("--reps", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(12345)
    graph = netgen.er_coupled(args.n, 0.5, args.lam, args.lam, rng)
    occupied = percolate(graph, 0.7, 0.7, rng)
    eu = np.ascontiguousarray(occupied.edge_u)
    ev = np.ascontiguousarray(occupied.edge_v)

    # warm up the JIT before timing
    _component_counts_numba(occupied.n, eu[:100], ev[:100])

    t_nb = time_call(_component_counts_numba, occupied.n, eu, ev, repeat=args.reps)
    t_py = time_call(_component_counts_python, occupied.n, eu, ev,
                     repeat=max(1, args.reps // 2))

    def replicate(counts_fn):
        r = np.random.default_rng(7)
        g = netgen.er_coupled(args.n, 0.5, args.lam, args.lam, r)
        occ = percolate(g, 0.7, 0.7, r)
        counts_fn(occ.n, np.ascontiguousarray(occ.edge_u),
                  np.ascontiguousarray(occ.edge_v))

    t_rep_nb = time_call(replicate, _component_counts_numba, repeat=args.reps)
    t_rep_py = time_call(replicate, _component_counts_python, repeat=1)

    print(f"n = {args.n}, edges = {occupied.num_edges}, lam = {args.lam}")
    print(f"{'kernel':<28}{'numba':>12}{'numpy/python':>16}{'speedup':>10}")
    print(f"{'component labelling':<28}{t_nb * 1e3:>10.2f}ms"
          f"{t_py * 1e3:>14.2f}ms{t_py / t_nb:>9.1f}x")
    print(f"{'full replicate':<28}{t_rep_nb * 1e3:>10.2f}ms"
          f"{t_rep_py * 1e3:>14.2f}ms{t_rep_py / t_rep_nb:>9.1f}x")


if __name__ == "__main__":
    main()
