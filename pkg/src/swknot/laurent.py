"""Sparse exact Laurent polynomials in one variable ``t``.

Coefficients are Python integers, so arithmetic is exact and cannot wrap.
"""
from __future__ import annotations

import re
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import InternalConsistencyError, NotAlexanderError, ParseError

__all__ = [
    "LaurentPoly",
    "add",
    "mul",
    "substitute_power",
    "normalize_alexander",
    "exact_divide",
    "is_normalized",
    "determinant",
    "parse",
]


class LaurentPoly:
    """Immutable Laurent polynomial ``sum c_e t^e`` with integer coefficients.

    >>> p = LaurentPoly.parse("t^-1 - 1 + t")
    >>> str(p * p)
    't^-2 - 2t^-1 + 3 - 2t + t^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                # bool is an int subclass but never a meaningful coefficient
                raise TypeError("exponents and coefficients must be integers")
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = MappingProxyType({e: acc[e] for e in sorted(acc) if acc[e] != 0})
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], lowest: int = 0) -> "LaurentPoly":
        """Dense coefficient list, lowest exponent first."""
        return cls({lowest + i: int(c) for i, c in enumerate(coeffs)})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse(text)

    # queries ------------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def span(self) -> int:
        """Degree span ``max - min``; 0 for constants and for the zero polynomial."""
        if not self._terms:
            return 0
        return self.max_exponent() - self.min_exponent()

    def leading_coefficient(self) -> int:
        return self._terms[self.max_exponent()]

    def trailing_coefficient(self) -> int:
        return self._terms[self.min_exponent()]

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def coefficients(self) -> list[int]:
        """Dense coefficients from ``min_exponent`` to ``max_exponent``."""
        if not self._terms:
            return []
        lo, hi = self.min_exponent(), self.max_exponent()
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def evaluate(self, x: int) -> int | float:
        if x == 0 and self._terms and self.min_exponent() < 0:
            raise ZeroDivisionError("negative exponent evaluated at 0")
        if x in (1, -1):
            return sum(c * (x ** (e % 2)) for e, c in self._terms.items())
        return sum(c * x**e for e, c in self._terms.items())

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def reflect(self) -> "LaurentPoly":
        """``p(t^-1)``."""
        return substitute_power(self, -1)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * n: c**(-n)})
            raise ValueError("only unit monomials have Laurent inverses")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (e, c) in enumerate(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return LaurentPoly.constant(x)
    return NotImplemented


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc = dict(p.terms)
    for e, c in q.terms.items():
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly(acc)


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc: dict[int, int] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
    return LaurentPoly(acc)


def substitute_power(p: LaurentPoly, k: int) -> LaurentPoly:
    """Return ``p(t^k)``."""
    if k == 0:
        raise ValueError("substitute_power needs a nonzero exponent multiplier")
    return LaurentPoly({k * e: c for e, c in p.terms.items()})


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Quotient ``p / q`` in Z[t, t^-1]; raises if the division leaves a remainder.

    Long division from the top exponent down. Every quotient coefficient of an
    exact division over Z is an integer, so a non-divisible leading
    coefficient already proves inexactness.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly()
    rem = dict(p.terms)
    q_hi, q_lo = q.max_exponent(), q.min_exponent()
    lead = q.terms[q_hi]
    p_lo = p.min_exponent()
    quotient: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top - q_hi < p_lo - q_lo:
            break
        c = rem[top]
        if c % lead:
            break
        f = c // lead
        shift = top - q_hi
        quotient[shift] = f
        for e, qc in q.terms.items():
            k = e + shift
            v = rem.get(k, 0) - f * qc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    if rem:
        raise InternalConsistencyError(f"{p} is not divisible by {q}")
    return LaurentPoly(quotient)


def is_normalized(p: LaurentPoly) -> bool:
    """True for the canonical Alexander representative: symmetric, value +1 at t=1."""
    return (
        not p.is_zero()
        and p.min_exponent() == -p.max_exponent()
        and p == p.reflect()
        and p.evaluate(1) == 1
    )


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative ``±t^k p`` that is symmetric with value 1 at t = 1.

    >>> str(normalize_alexander(LaurentPoly.parse("t^2 - t + 1")))
    't^-1 - 1 + t'
    """
    if p.is_zero():
        raise NotAlexanderError("the zero polynomial is not an Alexander polynomial")
    at_one = p.evaluate(1)
    if at_one not in (1, -1):
        raise NotAlexanderError(f"value at t=1 is {at_one}, expected +1 or -1")
    lo, hi = p.min_exponent(), p.max_exponent()
    if (lo + hi) % 2:
        raise NotAlexanderError(f"{p} is not an Alexander-symmetric polynomial (odd degree span)")
    u = p.shift(-(lo + hi) // 2)
    if at_one < 0:
        u = -u
    if u != u.reflect():
        raise NotAlexanderError(f"{p} is not an Alexander-symmetric polynomial")
    return u


def determinant(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant over Z[t, t^-1] by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly.constant(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    a = [[_coerce(x) for x in row] for row in matrix]
    sign = 1
    prev = LaurentPoly.constant(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_divide(pivot * a[i][j] - a[i][k] * a[k][j], prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*?\s*(?P<var1>t)(?:\s*\^\s*(?P<exp1>[+-]?\d+|\{[+-]?\d+\}|\([+-]?\d+\)))?)?
          | (?P<var2>t)(?:\s*\^\s*(?P<exp2>[+-]?\d+|\{[+-]?\d+\}|\([+-]?\d+\)))?
        )\s*""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """Parse ``t^-1 - 1 + t``-style text (also accepts ``3*t^2``, ``3t^{-2}``)."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    pos = 0
    acc: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse polynomial near {s[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ParseError(f"missing '+' or '-' before {s[pos:].strip()!r}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            has_var, exp = m.group("var1"), m.group("exp1")
        else:
            c = 1
            has_var, exp = m.group("var2"), m.group("exp2")
        if not has_var:
            e = 0
        elif exp is None:
            e = 1
        else:
            e = int(exp.strip("{}()"))
        acc[e] = acc.get(e, 0) + sign * c
        pos = m.end()
    return LaurentPoly(acc)
