"""Independent reference computations used to freeze expected values.

Nothing here calls the prefix-sum kernels; the chamber series are expanded by
literally summing ``±e^{±(2n+1)T} * Delta(e^{2T})`` term by term.
"""
from itertools import product

from swknot.laurent import LaurentPoly


def add_oracle(p, q):
    lo = min(p.min_exponent() if p else 0, q.min_exponent() if q else 0)
    hi = max(p.max_exponent() if p else 0, q.max_exponent() if q else 0)
    return {e: p.coefficient(e) + q.coefficient(e) for e in range(lo, hi + 1)
            if p.coefficient(e) + q.coefficient(e)}


def convolution_oracle(p, q):
    out = {}
    for (e1, c1), (e2, c2) in product(p.terms.items(), q.terms.items()):
        out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def series_oracle(delta, chamber, window):
    """Coefficients with |lambda| <= window of a chamber series by direct summation."""
    sign = -1 if chamber == "plus" else 1
    shifted = LaurentPoly({2 * e: c for e, c in delta.terms.items()})
    reach = max(abs(e) for e in shifted.terms) if shifted else 0
    total = LaurentPoly()
    # term n only touches |lambda| >= 2n + 1 - reach
    for n in range((window + reach) // 2 + 2):
        total = total + LaurentPoly({sign * (2 * n + 1): sign}) * shifted
    return {lam: c for lam, c in total.terms.items() if abs(lam) <= window}


def small_perturbation_oracle(delta, window):
    plus = series_oracle(delta, "plus", window)
    minus = series_oracle(delta, "minus", window)
    out = {lam: c for lam, c in plus.items() if lam > 0}
    out.update({lam: c for lam, c in minus.items() if lam < 0})
    return out


def torus_division_oracle(p, q):
    """Integer long division of (t^pq - 1)(t - 1) by (t^p - 1)(t^q - 1) on dense lists."""
    def mulp(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def tm1(k):
        return [-1] + [0] * (k - 1) + [1]

    num = mulp(tm1(p * q), tm1(1))
    den = mulp(tm1(p), tm1(q))
    quot = [0] * (len(num) - len(den) + 1)
    rem = num[:]
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(den) - 1] // den[-1]
        quot[i] = c
        for j, d in enumerate(den):
            rem[i + j] -= c * d
    assert not any(rem)
    shift = -(len(quot) - 1) // 2
    return {shift + i: c for i, c in enumerate(quot) if c}
