"""The homology lattice <1> + 9<-1> of E(1)_K and the chamber-side checks on it.

Coordinates are ``(h; e1, ..., e9)`` in a basis diagonalizing the
intersection form. The torus fiber class is ``[T] = (3; 1, ..., 1)`` and the
forward cone is oriented by ``omega0 = (1; 0, ..., 0)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InternalConsistencyError, LatticeError, ParseError

RANK = 10
FORM = (1,) + (-1,) * (RANK - 1)


@dataclass(frozen=True)
class FourManifoldModel:
    b2_plus: int = 1
    b2_minus: int = 9
    sigma: int = -8
    euler: int = 12
    simply_connected: bool = True

    def __post_init__(self):
        if self.sigma != self.b2_plus - self.b2_minus:
            raise LatticeError("signature must equal b2+ - b2-")
        if self.simply_connected and self.euler != 2 + self.b2_plus + self.b2_minus:
            raise LatticeError("Euler characteristic of a simply connected manifold is 2 + b2")


E1 = FourManifoldModel()


@dataclass(frozen=True)
class ClassVector:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(x) for x in self.coords)
        if len(coords) != RANK:
            raise LatticeError(f"class vectors have {RANK} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, h: int, *e: int) -> "ClassVector":
        """``ClassVector.of(3, *[1]*9)``; missing e-coordinates are zero."""
        return cls((h, *e, *(0,) * (RANK - 1 - len(e))))

    @classmethod
    def parse(cls, text: str) -> "ClassVector":
        m = re.fullmatch(r"\s*\(\s*([^;]+);([^)]*)\)\s*", text)
        if not m:
            raise ParseError(f"class vector must look like '(h; e1,...,e9)', got {text!r}")
        try:
            h = int(m.group(1))
            es = [int(x) for x in m.group(2).split(",")]
        except ValueError:
            raise ParseError(f"class vector entries must be integers: {text!r}") from None
        if len(es) != RANK - 1:
            raise ParseError(f"expected {RANK - 1} e-coordinates, got {len(es)}")
        return cls((h, *es))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "ClassVector") -> "ClassVector":
        return ClassVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ClassVector") -> "ClassVector":
        return ClassVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "ClassVector":
        return ClassVector(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "ClassVector":
        return ClassVector(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        h, *e = self.coords
        return f"({h}; {','.join(str(x) for x in e)})"


TORUS = ClassVector.of(3, *[1] * 9)
OMEGA0 = ClassVector.of(1)


def pairing(a: ClassVector, b: ClassVector) -> int:
    return sum(s * x * y for s, x, y in zip(FORM, a.coords, b.coords))


def square(a: ClassVector) -> int:
    return pairing(a, a)


def is_characteristic(c: ClassVector) -> bool:
    # on a diagonal odd form, c.x = x.x mod 2 for all x iff every coordinate is odd
    return all(x % 2 for x in c.coords)


def formal_dimension(c: ClassVector, model: FourManifoldModel = E1) -> int:
    """(c^2 - 3 sigma - 2 e) / 4 for a characteristic class c."""
    if not is_characteristic(c):
        raise LatticeError(f"{c} is not characteristic")
    if model.b2_plus + model.b2_minus != RANK:
        raise LatticeError("model rank does not match the lattice")
    num = square(c) - 3 * model.sigma - 2 * model.euler
    if num % 4:
        raise InternalConsistencyError(f"formal dimension numerator {num} not divisible by 4")
    return num // 4


def in_forward_cone(v: ClassVector, omega: ClassVector = OMEGA0) -> bool:
    return not v.is_zero() and square(v) >= 0 and pairing(v, omega) >= 0


def positively_proportional(a: ClassVector, b: ClassVector) -> bool:
    """True iff a = lambda b for some real lambda > 0."""
    if a.is_zero() or b.is_zero():
        return False
    x, y = a.coords, b.coords
    for i in range(RANK):
        for j in range(i + 1, RANK):
            if x[i] * y[j] != x[j] * y[i]:
                return False
    return sum(p * q for p, q in zip(x, y)) > 0


@dataclass(frozen=True)
class ConeReport:
    value: int
    proportional: bool
    holds: bool


def cone_product_check(a: ClassVector, b: ClassVector, omega: ClassVector = OMEGA0) -> ConeReport:
    """Pair two closed-forward-cone classes and confirm the light cone lemma for them."""
    if square(omega) <= 0:
        raise LatticeError(f"orientation class {omega} must have positive square")
    for name, v in (("a", a), ("b", b)):
        if not in_forward_cone(v, omega):
            raise LatticeError(f"{name} = {v} is not in the closed forward cone")
    value = pairing(a, b)
    prop = positively_proportional(a, b)
    holds = value >= 0 and (value != 0 or prop)
    return ConeReport(value, prop, holds)


def adjunction_check(genus: int, surface: ClassVector, c: ClassVector) -> bool:
    """2 genus - 2 >= |c . S| + S . S for a surface of non-negative square."""
    if genus < 0:
        raise LatticeError("genus must be non-negative")
    if surface.is_zero():
        raise LatticeError("surface class must be nonzero")
    s2 = square(surface)
    if s2 < 0:
        raise LatticeError(f"surface class {surface} has negative square {s2}")
    return 2 * genus - 2 >= abs(pairing(c, surface)) + s2


def canonical_class(span: int) -> ClassVector:
    """Model of K_X for E(1)_K: (2g - 1)[T] with 2g the degree span of Δ_K."""
    if span % 2:
        raise LatticeError("Alexander polynomial span must be even")
    return TORUS * (span - 1)


# ---------------------------------------------------------------------------
# exhaustive light-cone scan

def forward_cone_vectors(bound: int, omega: ClassVector = OMEGA0) -> np.ndarray:
    """All nonzero forward-cone vectors with every coordinate in [-bound, bound].

    The e-part is grown one coordinate at a time, dropping partial vectors
    whose square already exceeds bound^2 (no extension of those can satisfy
    e^2 <= h^2 <= bound^2).
    """
    if omega != OMEGA0:
        raise LatticeError("the vectorized scan is implemented for omega0 only")
    axis = np.arange(-bound, bound + 1, dtype=np.int64)
    es = np.zeros((1, 0), dtype=np.int64)
    for _ in range(RANK - 1):
        es = np.concatenate(
            (np.repeat(es, axis.size, axis=0), np.tile(axis, es.shape[0])[:, None]), axis=1
        )
        es = es[(es * es).sum(axis=1) <= bound * bound]
    e2 = (es * es).sum(axis=1)
    chunks = []
    for h in range(1, bound + 1):
        sel = es[e2 <= h * h]
        chunks.append(np.concatenate((np.full((sel.shape[0], 1), h, dtype=np.int64), sel), axis=1))
    return np.concatenate(chunks)


def _primitive_ids(vectors: np.ndarray, bound: int) -> np.ndarray:
    g = np.gcd.reduce(np.abs(vectors), axis=1)
    prim = vectors // g[:, None]
    base = 2 * bound + 1
    weights = base ** np.arange(vectors.shape[1], dtype=np.int64)
    return ((prim + bound) * weights).sum(axis=1)


@dataclass(frozen=True)
class ConeScan:
    vectors: int
    pairs: int
    negative: int
    improper_zero: int
    min_value: int

    @property
    def holds(self) -> bool:
        return self.negative == 0 and self.improper_zero == 0


def cone_scan(bound: int = 2, kernel=None) -> ConeScan:
    """Check the light cone lemma on every pair of small-coordinate cone vectors."""
    _kernels.check_int64(RANK * bound**4, "cone scan pairing")
    vs = forward_cone_vectors(bound)
    ids = _primitive_ids(vs, bound)
    kernel = kernel or _kernels.cone_pair_scan
    neg, bad, lo = kernel(vs, np.asarray(FORM, dtype=np.int64), ids)
    m = vs.shape[0]
    return ConeScan(m, m * (m + 1) // 2, int(neg), int(bad), int(lo))
