"""Compare the numba-compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--sizes 50 100 200] [--repeat 3]

Both backends are called in-process through the ``backend`` argument, so a
single run covers both; results are checked for equality before timing.
"""
import argparse
import time

import numpy as np

from tripts import kernels
from tripts._accel import NUMBA_ENABLED
from tripts.generators import random_general_position
from tripts.graphs import build_cone_minimum


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not NUMBA_ENABLED:
        print("numba disabled (TRIPTS_NUMBA=0 or not installed): numba column runs the numpy code")

    print(f"{'kernel':24} {'n':>5} {'numba [ms]':>11} {'numpy [ms]':>11} {'speedup':>8}")
    for n in args.sizes:
        ps = random_general_position(n, n)
        X, Y = ps.lattice
        g = build_cone_minimum(ps)
        E = np.array(sorted(g.edges), dtype=np.int64)
        indptr, indices = g.csr()
        cases = {
            "cone_minimum": lambda b: kernels.cone_minimum_winners(X, Y, True, b)[0],
            "oracle": lambda b: kernels.oracle_edges(X, Y, True, b),
            "first_crossing": lambda b: kernels.first_crossing(X, Y, E, b),
            "triangle_paths": lambda b: kernels.first_pair_without_triangle_path(X, Y, indptr, indices, True, b),
        }
        for name, fn in cases.items():
            if name == "oracle" and n > 200:
                continue
            a, b = fn("numba"), fn("numpy")  # also warms up the JIT
            assert np.array_equal(np.asarray(a, dtype=object), np.asarray(b, dtype=object)), name
            t_nb = _best(lambda: fn("numba"), args.repeat)
            t_np = _best(lambda: fn("numpy"), args.repeat)
            print(f"{name:24} {n:>5} {1e3 * t_nb:>11.2f} {1e3 * t_np:>11.2f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
