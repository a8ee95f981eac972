"""Time the compiled and pure-Python Sturm kernels on oracle-sized grids.

    python benchmarks/bench_sturm.py [--repeat 3]
"""
import argparse
import time

import numpy as np

from deltabound import _sturm_py
from deltabound.model import DeltaPotential
from deltabound.oracle import build_grid, default_grid

try:
    from deltabound import _sturm
except ImportError:
    _sturm = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--count", type=int, default=3)
    args = parser.parse_args()

    pot = DeltaPotential(((2.0, -1.0), (2.0, 1.0)))
    backends = [("python", _sturm_py)] + ([("cython", _sturm)] if _sturm else [])
    print(f"{'h':>8} {'n':>7} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for h in (1e-2, 5e-3, 2.5e-3):
        padding, n = default_grid(pot, h=h)
        ham = build_grid(pot, padding, n)
        lo = ham.diagonal.min() - 2 * abs(ham.off_diagonal)
        hi = ham.diagonal.max() + 2 * abs(ham.off_diagonal)
        results = []
        for _, mod in backends:
            t, eigs = best_of(lambda: mod.bisect_eigenvalues(
                ham.diagonal, ham.off, args.count, 1e-11, lo, hi), args.repeat)
            results.append((t, eigs))
        if len(results) == 2:
            assert np.array_equal(results[0][1], results[1][1])
        cols = " ".join(f"{t * 1e3:8.1f}ms" for t, _ in results)
        speed = f"{results[0][0] / results[1][0]:8.1f}x" if len(results) == 2 else ""
        print(f"{h:8.1e} {n:7d} {cols} {speed}")


if __name__ == "__main__":
    main()
