#!/usr/bin/env python3
"""Benchmark the box-scan kernel: numba JIT path vs. pure-numpy fallback.

Counts lattice points of dilates of the standard simplex through both
code paths and reports timings.  Run directly:

    python3 benchmarks/bench_kernels.py [--dilations 20 40 80]
"""

import argparse
import time

import numpy as np

from eak import _kernels


def simplex_system(t: int):
    A = np.array([[-1, 0, 0], [0, -1, 0], [0, 0, -1], [1, 1, 1]], dtype=np.int64)
    C = np.array([0, 0, 0, t], dtype=np.int64)
    lo = np.zeros(3, dtype=np.int64)
    hi = np.full(3, t, dtype=np.int64)
    return A, C, lo, hi


def timed(fn, args, repeat: int = 3) -> tuple[float, tuple]:
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dilations", type=int, nargs="+", default=[20, 40, 80, 120])
    args = parser.parse_args()

    if not _kernels.numba_enabled():
        print("numba path unavailable (not installed or EAK_NO_NUMBA=1);")
        print("timing the numpy fallback only.\n")

    # warm up the JIT so compilation time is not attributed to the first row
    if _kernels.numba_enabled():
        _kernels._scan_numba_wrapper(*simplex_system(5))

    header = f"{'t':>5} {'points':>10} {'numpy (s)':>12}"
    if _kernels.numba_enabled():
        header += f" {'numba (s)':>12} {'speedup':>9}"
    print(header)
    for t in args.dilations:
        system = simplex_system(t)
        t_np, (ni, nb) = timed(_kernels.scan_box_numpy, system)
        total = ni + len(nb)
        row = f"{t:>5} {total:>10} {t_np:>12.4f}"
        if _kernels.numba_enabled():
            t_nb, (ji, jb) = timed(_kernels._scan_numba_wrapper, system)
            assert ji == ni and len(jb) == len(nb), "kernel paths disagree"
            row += f" {t_nb:>12.4f} {t_np / t_nb:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
