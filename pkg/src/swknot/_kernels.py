"""Numeric inner loops, each with a numba and a pure-numpy implementation.

The numba path is used when numba is installed, the environment variable
``SWKNOT_DISABLE_NUMBA`` is unset (or ``0``), and the work is large enough to
repay compilation; numba itself is imported on first use. Both paths are
importable under explicit names so tests and the benchmark can compare them.

All kernels work in int64. Callers must bound their inputs so that no
intermediate can exceed ``INT64_SAFE``; :func:`check_int64` does that.
"""
from __future__ import annotations

import importlib.util
import os
from functools import lru_cache

import numpy as np

INT64_SAFE = 2**62


def _numba_requested() -> bool:
    return os.environ.get("SWKNOT_DISABLE_NUMBA", "0").strip().lower() in ("", "0", "false", "no")


def _numba_available() -> bool:
    return importlib.util.find_spec("numba") is not None


BACKEND = "numba" if _numba_requested() and _numba_available() else "numpy"

# below these work sizes the JIT (import + dispatch) costs more than it saves
CHAMBER_JIT_MIN_WORK = 1_000_000
CONE_JIT_MIN_PAIRS = 250_000


def check_int64(bound: int, what: str) -> None:
    if bound >= INT64_SAFE:
        raise OverflowError(f"{what} exceeds the int64 kernel range ({bound})")


# ---------------------------------------------------------------------------
# chamber series coefficients
#
# For dense Alexander coefficients a[i] at exponent lo + i, the coefficient of
# e^{lam T} in
#   plus : -sum_{n>=0} e^{-(2n+1)T} Delta(e^{2T})  is  -sum_{k >= (lam+1)/2} a_k
#   minus:  sum_{n>=0} e^{+(2n+1)T} Delta(e^{2T})  is   sum_{k <= (lam-1)/2} a_k
# for odd lam, so each chamber is a prefix/suffix sum of a.

def chamber_coefficients_numpy(coeffs, lo, plus, lambdas):
    a = np.asarray(coeffs, dtype=np.int64)
    lam = np.asarray(lambdas, dtype=np.int64)
    prefix = np.concatenate((np.zeros(1, np.int64), np.cumsum(a)))
    total = prefix[-1]
    if plus:
        # k >= (lam+1)/2  <=>  i >= (lam+1)/2 - lo
        start = np.clip((lam + 1) // 2 - lo, 0, a.size)
        return -(total - prefix[start])
    stop = np.clip((lam - 1) // 2 - lo + 1, 0, a.size)
    return prefix[stop]


def _chamber_coefficients_loop(coeffs, lo, plus, lambdas):
    n = coeffs.shape[0]
    prefix = np.zeros(n + 1, dtype=np.int64)
    for i in range(n):
        prefix[i + 1] = prefix[i] + coeffs[i]
    out = np.empty(lambdas.shape[0], dtype=np.int64)
    for j in range(lambdas.shape[0]):
        lam = lambdas[j]
        if plus:
            i = min(max((lam + 1) // 2 - lo, 0), n)
            out[j] = prefix[i] - prefix[n]
        else:
            i = min(max((lam - 1) // 2 - lo + 1, 0), n)
            out[j] = prefix[i]
    return out


# ---------------------------------------------------------------------------
# light-cone pair scan
#
# vectors: (m, d) int64 rows; signs: (d,) diagonal of the form; ids: (m,)
# label of each row's primitive positive direction. Counts pairs (i <= j)
# with negative pairing, and pairs with zero pairing that are not positively
# proportional (different primitive labels).

def cone_pair_scan_numpy(vectors, signs, ids, block=512):
    v = np.asarray(vectors, dtype=np.int64)
    w = v * np.asarray(signs, dtype=np.int64)
    ids = np.asarray(ids, dtype=np.int64)
    m = v.shape[0]
    negative = 0
    improper_zero = 0
    min_value = np.iinfo(np.int64).max
    for start in range(0, m, block):
        stop = min(start + block, m)
        gram = w[start:stop] @ v.T
        rows = np.arange(start, stop)[:, None]
        upper = np.arange(m)[None, :] >= rows
        vals = gram[upper]
        if vals.size:
            min_value = min(min_value, int(vals.min()))
        negative += int(np.count_nonzero(vals < 0))
        same = ids[start:stop, None] == ids[None, :]
        improper_zero += int(np.count_nonzero((gram == 0) & ~same & upper))
    return negative, improper_zero, min_value


def _cone_pair_scan_loop(vectors, signs, ids):
    m, d = vectors.shape
    negative = 0
    improper_zero = 0
    min_value = np.iinfo(np.int64).max
    for i in range(m):
        for j in range(i, m):
            s = 0
            for k in range(d):
                s += signs[k] * vectors[i, k] * vectors[j, k]
            if s < min_value:
                min_value = s
            if s < 0:
                negative += 1
            elif s == 0 and ids[i] != ids[j]:
                improper_zero += 1
    return negative, improper_zero, min_value


@lru_cache(maxsize=None)
def _jit(name):
    import numba

    return numba.njit(cache=True)(globals()[name])


def chamber_coefficients_numba(coeffs, lo, plus, lambdas):
    return _jit("_chamber_coefficients_loop")(
        np.ascontiguousarray(coeffs, dtype=np.int64),
        np.int64(lo),
        bool(plus),
        np.ascontiguousarray(lambdas, dtype=np.int64),
    )


def cone_pair_scan_numba(vectors, signs, ids):
    neg, bad, lo = _jit("_cone_pair_scan_loop")(
        np.ascontiguousarray(vectors, dtype=np.int64),
        np.ascontiguousarray(signs, dtype=np.int64),
        np.ascontiguousarray(ids, dtype=np.int64),
    )
    return int(neg), int(bad), int(lo)


def chamber_coefficients(coeffs, lo, plus, lambdas):
    if BACKEND == "numba" and len(coeffs) * len(lambdas) >= CHAMBER_JIT_MIN_WORK:
        return chamber_coefficients_numba(coeffs, lo, plus, lambdas)
    return chamber_coefficients_numpy(coeffs, lo, plus, lambdas)


def cone_pair_scan(vectors, signs, ids):
    m = len(vectors)
    if BACKEND == "numba" and m * m >= CONE_JIT_MIN_PAIRS:
        return cone_pair_scan_numba(vectors, signs, ids)
    return cone_pair_scan_numpy(vectors, signs, ids)
