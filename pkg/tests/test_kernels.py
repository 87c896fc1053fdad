import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from swknot import _kernels


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=40),
    st.integers(-30, 30),
    st.booleans(),
    st.integers(1, 60),
)
def test_chamber_kernels_agree(coeffs, lo, plus, window):
    lambdas = np.arange(-window | 1, window + 1, 2)
    a = _kernels.chamber_coefficients_numpy(coeffs, lo, plus, lambdas)
    b = _kernels.chamber_coefficients_numba(coeffs, lo, plus, lambdas)
    assert a.tolist() == b.tolist()


def test_chamber_kernel_brute_force():
    coeffs, lo = [1, -1, 1], -1
    lambdas = np.arange(-7, 8, 2)
    for plus in (True, False):
        got = _kernels.chamber_coefficients_numpy(coeffs, lo, plus, lambdas).tolist()
        want = []
        for lam in lambdas.tolist():
            ks = range(lo, lo + len(coeffs))
            if plus:
                want.append(-sum(coeffs[k - lo] for k in ks if 2 * k >= lam + 1))
            else:
                want.append(sum(coeffs[k - lo] for k in ks if 2 * k <= lam - 1))
        assert got == want


def test_cone_kernels_agree_random():
    rng = np.random.default_rng(5)
    v = rng.integers(-3, 4, size=(300, 10))
    signs = np.array([1] + [-1] * 9)
    ids = rng.integers(0, 20, size=300)
    assert _kernels.cone_pair_scan_numpy(v, signs, ids) == _kernels.cone_pair_scan_numba(v, signs, ids)
    assert _kernels.cone_pair_scan_numpy(v, signs, ids, block=7) == _kernels.cone_pair_scan_numpy(v, signs, ids)


def test_check_int64():
    _kernels.check_int64(2**62 - 1, "x")
    with pytest.raises(OverflowError):
        _kernels.check_int64(2**62, "x")


@pytest.mark.parametrize("flag, expected", [("1", "numpy"), ("0", "numba")])
def test_env_flag_selects_backend(flag, expected):
    code = "from swknot import _kernels; print(_kernels.BACKEND)"
    res = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True, text=True, check=True,
        env={"SWKNOT_DISABLE_NUMBA": flag, "PATH": "/usr/bin:/bin"},
    )
    assert res.stdout.strip() == expected


def test_numpy_backend_end_to_end():
    code = (
        "from swknot import _kernels\n"
        "from swknot.lattice import cone_scan\n"
        "from swknot.swseries import sw_small_perturbation\n"
        "from swknot.laurent import LaurentPoly\n"
        "assert _kernels.BACKEND == 'numpy'\n"
        "assert cone_scan(2).holds\n"
        "print(sw_small_perturbation(LaurentPoly.parse('t^-1 - 1 + t')).pretty())\n"
    )
    res = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, check=True,
        env={"SWKNOT_DISABLE_NUMBA": "1", "PATH": "/usr/bin:/bin"},
    )
    assert res.stdout == "-e^{T} + e^{-T}\n"
