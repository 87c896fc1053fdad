"""Compare the numba and numpy kernel paths.

    python benchmarks/bench_kernels.py [--repeat N]

The numba kernels are compiled once before timing; the reported compile time
is what a cold process pays on first use.
"""
import argparse
import time
import timeit

import numpy as np

from swknot import _kernels
from swknot.knots import random_alexander
from swknot.lattice import FORM, _primitive_ids, forward_cone_vectors


def best_of(fn, repeat, number=1):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    cases = []

    for bound in (1, 2):
        vs = forward_cone_vectors(bound)
        ids = _primitive_ids(vs, bound)
        signs = np.asarray(FORM, dtype=np.int64)
        cases.append((
            f"cone scan bound={bound} ({len(vs)} vectors)",
            lambda vs=vs, ids=ids: _kernels.cone_pair_scan_numpy(vs, signs, ids),
            lambda vs=vs, ids=ids: _kernels.cone_pair_scan_numba(vs, signs, ids),
        ))

    for genus, window in ((5, 25), (200, 10_001), (5000, 200_001)):
        d = random_alexander(rng, genus)
        coeffs = np.asarray(d.coefficients(), dtype=np.int64)
        lambdas = np.arange(-window, window + 1, 2, dtype=np.int64)
        lo = d.min_exponent()
        cases.append((
            f"chamber series g={genus} window={window}",
            lambda c=coeffs, lam=lambdas, lo=lo: _kernels.chamber_coefficients_numpy(c, lo, True, lam),
            lambda c=coeffs, lam=lambdas, lo=lo: _kernels.chamber_coefficients_numba(c, lo, True, lam),
        ))

    t0 = time.perf_counter()
    for _, _, jit in cases:
        jit()
    print(f"numba compile/cache load: {time.perf_counter() - t0:.3f} s\n")

    print(f"{'case':<42} {'numpy':>11} {'numba':>11} {'speedup':>8}")
    for name, ref, jit in cases:
        a, b = ref(), jit()
        same = np.array_equal(np.asarray(a), np.asarray(b))
        t_np = best_of(ref, args.repeat)
        t_nb = best_of(jit, args.repeat)
        flag = "" if same else "  MISMATCH"
        print(f"{name:<42} {t_np * 1e3:>9.3f}ms {t_nb * 1e3:>9.3f}ms {t_np / t_nb:>7.1f}x{flag}")


if __name__ == "__main__":
    main()
