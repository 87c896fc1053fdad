"""Seiberg-Witten series of E(1)_K supported on odd multiples of the fiber class [T].

A series is a finite map ``lambda -> value`` meaning ``sum value * e^{lambda [T]}``.

The two chamber series of E(1)_K are

    plus :  - sum_{n >= 0} e^{-(2n+1)[T]} * Delta(e^{2[T]})
    minus:  + sum_{n >= 0} e^{+(2n+1)[T]} * Delta(e^{2[T]})

and the small-perturbation invariant keeps the positive-lambda part of the
plus series and the negative-lambda part of the minus series.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _kernels
from .errors import InternalConsistencyError, NotAlexanderError, NotApplicableError, NotFiberedError
from .knots import is_fibered_candidate
from .laurent import LaurentPoly, is_normalized
from .lattice import TORUS, formal_dimension, square

PLUS = "plus"
MINUS = "minus"
CHAMBERS = (PLUS, MINUS)


@dataclass(frozen=True)
class SWSeries:
    """Immutable odd-lambda series; ``window`` is None for a complete finite sum."""

    values: tuple[tuple[int, int], ...] = ()
    window: int | None = None

    def __post_init__(self):
        acc: dict[int, int] = {}
        for lam, v in self.values:
            lam, v = int(lam), int(v)
            if lam % 2 == 0:
                # even multiples of [T] (including 0) are never characteristic
                raise InternalConsistencyError(f"series key {lam} is not odd")
            acc[lam] = acc.get(lam, 0) + v
        object.__setattr__(self, "values", tuple((k, acc[k]) for k in sorted(acc) if acc[k]))

    @classmethod
    def from_mapping(cls, values: Mapping[int, int], window: int | None = None) -> "SWSeries":
        return cls(tuple(values.items()), window)

    @classmethod
    def from_records(cls, records: Iterable[Mapping], window: int | None = None) -> "SWSeries":
        return cls(tuple((r["lambda"], r["value"]) for r in records), window)

    def __getitem__(self, lam: int) -> int:
        return dict(self.values).get(lam, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __bool__(self) -> bool:
        return bool(self.values)

    def lambdas(self) -> list[int]:
        return [lam for lam, _ in self.values]

    def positive_part(self) -> "SWSeries":
        return SWSeries(tuple(x for x in self.values if x[0] > 0), None)

    def negative_part(self) -> "SWSeries":
        return SWSeries(tuple(x for x in self.values if x[0] < 0), None)

    def __add__(self, other: "SWSeries") -> "SWSeries":
        window = None
        if self.window is not None or other.window is not None:
            window = min(w for w in (self.window, other.window) if w is not None)
        return SWSeries(self.values + other.values, window)

    def to_records(self) -> list[dict[str, int]]:
        return [{"lambda": lam, "value": v} for lam, v in self.values]

    def pretty(self) -> str:
        """Highest power first, e.g. ``-e^{T} + e^{-T}``; ``0`` when empty."""
        if not self.values:
            return "0"
        out = []
        for i, (lam, v) in enumerate(reversed(self.values)):
            exp = "T" if lam == 1 else "-T" if lam == -1 else f"{lam}T"
            mag = abs(v)
            body = f"e^{{{exp}}}" if mag == 1 else f"{mag}e^{{{exp}}}"
            if i == 0:
                out.append(("-" if v < 0 else "") + body)
            else:
                out.append((" - " if v < 0 else " + ") + body)
        return "".join(out)

    def __str__(self) -> str:
        return self.pretty()


def genus(delta: LaurentPoly) -> int:
    return delta.span() // 2


def _check_delta(delta: LaurentPoly, require_monic: bool = True) -> None:
    if not is_normalized(delta):
        raise NotAlexanderError(
            f"{delta} is not a normalized Alexander polynomial (symmetric, value 1 at t=1)"
        )
    if require_monic and not is_fibered_candidate(delta):
        raise NotFiberedError(
            f"leading coefficient of {delta} is {delta.leading_coefficient()}, "
            "so the knot is not fibered"
        )


def _chamber_values(delta: LaurentPoly, chamber: str, lambdas: np.ndarray) -> np.ndarray:
    if chamber not in CHAMBERS:
        raise ValueError(f"chamber must be 'plus' or 'minus', got {chamber!r}")
    coeffs = delta.coefficients()
    _kernels.check_int64(sum(abs(c) for c in coeffs), "sum of Alexander coefficients")
    _kernels.check_int64(max((abs(int(x)) for x in lambdas), default=0), "series window")
    return _kernels.chamber_coefficients(
        np.asarray(coeffs, dtype=np.int64), delta.min_exponent(), chamber == PLUS, lambdas
    )


def _odd_range(lo: int, hi: int) -> np.ndarray:
    start = lo if lo % 2 else lo + 1
    return np.arange(start, hi + 1, 2, dtype=np.int64)


def fs_series(delta: LaurentPoly, chamber: str, window: int, *, require_monic: bool = True) -> SWSeries:
    """Chamber series truncated to odd ``|lambda| <= window``."""
    _check_delta(delta, require_monic)
    if window < delta.span():
        raise ValueError(f"window {window} is smaller than the degree span {delta.span()}")
    lambdas = _odd_range(-window, window)
    vals = _chamber_values(delta, chamber, lambdas)
    return SWSeries(tuple(zip(lambdas.tolist(), vals.tolist())), window)


def sw_small_perturbation(delta: LaurentPoly, *, require_monic: bool = True) -> SWSeries:
    """SW° = P+ + P-, a complete finite series.

    Only n < g contributes to either partial sum, so every basic class lies in
    ``|lambda| <= 2g - 1``.
    """
    _check_delta(delta, require_monic)
    top = max(delta.span() - 1, 1)
    pos = _odd_range(1, top)
    neg = _odd_range(-top, -1)
    plus_vals = _chamber_values(delta, PLUS, pos)
    minus_vals = _chamber_values(delta, MINUS, neg)
    pairs = list(zip(neg.tolist(), minus_vals.tolist())) + list(zip(pos.tolist(), plus_vals.tolist()))
    return SWSeries(tuple(pairs), None)


@dataclass(frozen=True)
class WallCrossingReport:
    window: int
    checked: int
    ok: bool
    first_violation: tuple[int, int, int] | None = None  # (lambda, plus, minus)
    rows: tuple[tuple[int, int, int], ...] = ()

    def summary(self) -> str:
        if self.ok:
            return f"wall crossing holds for all {self.checked} odd |lambda| <= {self.window}"
        lam, p, m = self.first_violation
        return f"wall crossing fails at lambda={lam}: plus={p}, minus={m}, difference={p - m}"


def wall_crossing_check(delta: LaurentPoly, window: int | None = None) -> WallCrossingReport:
    """Check SW+(L) - SW-(L) = -(-1)^(dim/2) for L = lambda[T], every odd |lambda| <= window."""
    _check_delta(delta)
    if window is None:
        window = 4 * genus(delta) + 5
    plus = fs_series(delta, PLUS, window)
    minus = fs_series(delta, MINUS, window)
    rows = []
    violation = None
    for lam in _odd_range(-window, window).tolist():
        dim = formal_dimension(TORUS * lam)
        if dim < 0 or dim % 2:
            raise InternalConsistencyError(f"formal dimension {dim} at lambda={lam}")
        expected = -((-1) ** (dim // 2))
        p, m = plus[lam], minus[lam]
        rows.append((lam, p, m))
        if p - m != expected and violation is None:
            violation = (lam, p, m)
    return WallCrossingReport(window, len(rows), violation is None, violation, tuple(rows))


def canonical_class_coefficient(delta: LaurentPoly) -> tuple[int, int]:
    """Top basic class lambda and its SW° value; must be (2g - 1, -leading coeff)."""
    _check_delta(delta)
    if delta.span() == 0:
        raise NotApplicableError("trivial Alexander polynomial has no basic classes")
    sw = sw_small_perturbation(delta)
    lam_top, value = sw.values[-1]
    g = genus(delta)
    if lam_top != 2 * g - 1 or value != -delta.leading_coefficient():
        raise InternalConsistencyError(
            f"top basic class is {value} at {lam_top}, expected "
            f"{-delta.leading_coefficient()} at {2 * g - 1}"
        )
    return lam_top, value


def basic_class_differences_square(sw: SWSeries) -> list[int]:
    """Lattice squares of (lambda_i - lambda_j)[T] over all pairs of basic classes."""
    lams = sw.lambdas()
    return [
        square(TORUS * (a - b)) for i, a in enumerate(lams) for b in lams[i + 1:]
    ]
