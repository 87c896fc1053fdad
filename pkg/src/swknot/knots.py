"""Knot presentations, Alexander polynomials, and the torus-knot catalog."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from pathlib import Path

from .errors import (
    BraidError,
    InternalConsistencyError,
    ParseError,
    SeifertError,
    SwknotError,
)
from .laurent import LaurentPoly, determinant, exact_divide, normalize_alexander

__all__ = [
    "BraidWord",
    "SeifertMatrix",
    "KnotInput",
    "TableRow",
    "alexander_from_seifert",
    "alexander_from_braid",
    "is_fibered_candidate",
    "torus_alexander",
    "torus_braid",
    "match_torus",
    "random_alexander",
    "read_knot_table",
    "builtin_table",
    "builtin_knot",
    "BUILTIN_SEIFERT",
]

T = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators; letter ``i`` is sigma_i, ``-i`` its inverse."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"a braid needs at least 2 strands, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise BraidError(
                    f"generator index {x} out of range for {self.strands} strands"
                )

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        """Parse space- or comma-separated signed generator indices, e.g. ``1 -2 1 -2``."""
        tokens = text.replace(",", " ").split()
        if not tokens:
            raise BraidError("empty braid word")
        try:
            letters = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise BraidError(f"braid word must be signed integers, got {text!r}") from None
        if strands is None:
            strands = max(abs(x) for x in letters) + 1
        return cls(strands, letters)

    def permutation(self) -> list[int]:
        perm = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def components(self) -> int:
        """Number of components of the braid closure."""
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for start in range(self.strands):
            if not seen[start]:
                count += 1
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return count

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SeifertError("Seifert matrix must be square")
        if n % 2:
            raise SeifertError(f"Seifert matrix must have even size, got {n}x{n}")
        skew = [
            [LaurentPoly.constant(rows[i][j] - rows[j][i]) for j in range(n)]
            for i in range(n)
        ]
        d = determinant(skew)
        if d != ONE:
            raise SeifertError(f"det(V - V^T) must be 1, got {d}")

    @classmethod
    def parse(cls, text: str) -> "SeifertMatrix":
        """JSON nested list, e.g. ``[[-1, 1], [0, -1]]``."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"Seifert matrix must be a JSON list of rows: {exc}") from None
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ParseError("Seifert matrix must be a JSON list of rows")
        if not all(isinstance(x, int) and not isinstance(x, bool) for r in data for x in r):
            raise ParseError("Seifert matrix entries must be integers")
        return cls(tuple(tuple(r) for r in data))

    @property
    def genus(self) -> int:
        return len(self.entries) // 2


@dataclass(frozen=True)
class KnotInput:
    """A named knot given by exactly one of a braid, a Seifert matrix, or Δ itself."""

    name: str
    braid: BraidWord | None = None
    seifert: SeifertMatrix | None = None
    delta: LaurentPoly | None = None

    def __post_init__(self):
        given = sum(x is not None for x in (self.braid, self.seifert, self.delta))
        if given != 1:
            raise SwknotError(
                f"knot {self.name!r} needs exactly one of braid, Seifert matrix, polynomial"
            )

    def alexander(self) -> LaurentPoly:
        if self.braid is not None:
            return alexander_from_braid(self.braid)
        if self.seifert is not None:
            return alexander_from_seifert(self.seifert)
        return normalize_alexander(self.delta)


def alexander_from_seifert(v: SeifertMatrix) -> LaurentPoly:
    """Normalized det(V - t V^T)."""
    n = len(v.entries)
    m = [
        [LaurentPoly({0: v.entries[i][j], 1: -v.entries[j][i]}) for j in range(n)]
        for i in range(n)
    ]
    return normalize_alexander(determinant(m))


def _burau_generator(n: int, i: int, inverse: bool) -> list[list[LaurentPoly]]:
    # reduced Burau image of sigma_i (1-based) as an (n-1)x(n-1) matrix
    size = n - 1
    m = [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]
    k = i - 1
    tinv = LaurentPoly.monomial(-1)
    if inverse:
        m[k][k] = -tinv
        if k > 0:
            m[k - 1][k] = ONE
        if k < size - 1:
            m[k + 1][k] = tinv
    else:
        m[k][k] = -T
        if k > 0:
            m[k - 1][k] = T
        if k < size - 1:
            m[k + 1][k] = ONE
    return m


def _matmul(a, b):
    n = len(a)
    return [
        [sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), ZERO) for j in range(n)]
        for i in range(n)
    ]


def burau_reduced(b: BraidWord) -> list[list[LaurentPoly]]:
    n = b.strands
    cache = {}
    m = [[ONE if r == c else ZERO for c in range(n - 1)] for r in range(n - 1)]
    for x in b.letters:
        if x not in cache:
            cache[x] = _burau_generator(n, abs(x), x < 0)
        m = _matmul(m, cache[x])
    return m


def alexander_from_braid(b: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure via det(I - Burau(b)) = Δ (1 + t + ... + t^(n-1))."""
    comps = b.components()
    if comps != 1:
        raise BraidError(f"braid closure is a {comps}-component link, not a knot")
    n = b.strands
    m = burau_reduced(b)
    ident_minus = [
        [(ONE if r == c else ZERO) - m[r][c] for c in range(n - 1)] for r in range(n - 1)
    ]
    d = determinant(ident_minus)
    cyclo = LaurentPoly({e: 1 for e in range(n)})
    try:
        q = exact_divide(d, cyclo)
    except InternalConsistencyError as exc:
        raise InternalConsistencyError(
            f"Burau determinant {d} not divisible by {cyclo}"
        ) from exc
    return normalize_alexander(q)


def is_fibered_candidate(delta: LaurentPoly) -> bool:
    """Monicity screen: top (and, by symmetry, bottom) coefficient is ±1."""
    return abs(delta.leading_coefficient()) == 1


def torus_alexander(p: int, q: int) -> LaurentPoly:
    if p < 2 or q < 2:
        raise SwknotError(f"torus knot parameters must be >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise SwknotError(f"torus knot parameters must be coprime, got ({p}, {q})")

    def t_minus_1(k):
        return LaurentPoly({k: 1, 0: -1})

    num = t_minus_1(p * q) * t_minus_1(1)
    den = t_minus_1(p) * t_minus_1(q)
    return normalize_alexander(exact_divide(num, den))


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^q on p strands, whose closure is T(p, q)."""
    return BraidWord(p, tuple(range(1, p)) * q)


def torus_candidates(span: int) -> list[tuple[int, int]]:
    """Coprime 2 <= p < q with (p-1)(q-1) = span."""
    out = []
    for p in range(2, span + 2):
        if span % (p - 1):
            continue
        q = span // (p - 1) + 1
        if p < q and gcd(p, q) == 1:
            out.append((p, q))
    return out


def match_torus(delta: LaurentPoly) -> tuple[int, int] | None:
    span = delta.span()
    if span == 0:
        return None
    hits = [pq for pq in torus_candidates(span) if torus_alexander(*pq) == delta]
    if len(hits) > 1:
        raise InternalConsistencyError(f"several torus knots share {delta}: {hits}")
    return hits[0] if hits else None


def random_alexander(rng, genus: int, coeff_bound: int = 9, monic: bool = True) -> LaurentPoly:
    """Random symmetric Δ of the given genus with Δ(1) = 1.

    ``rng`` is a ``numpy.random.Generator``. Interior coefficients are uniform in
    ``[-coeff_bound, coeff_bound]``; the constant term is solved from Δ(1) = 1.
    """
    if genus == 0:
        return ONE
    if monic:
        top = int(rng.choice([-1, 1]))
    else:
        top = int(rng.integers(2, coeff_bound + 1)) * int(rng.choice([-1, 1]))
    inner = [int(x) for x in rng.integers(-coeff_bound, coeff_bound + 1, size=genus - 1)]
    side = inner + [top]
    terms = {0: 1 - 2 * sum(side)}
    for k, c in enumerate(side, start=1):
        terms[k] = c
        terms[-k] = c
    return LaurentPoly(terms)


# ---------------------------------------------------------------------------
# knot tables

TABLE_COLUMNS = ("name", "braid_word", "alexander")


@dataclass(frozen=True)
class TableRow:
    name: str
    braid_word: str = ""
    alexander: str = ""
    line: int = field(default=0, compare=False)

    def to_knot(self) -> KnotInput:
        """Build the knot, cross-validating the two columns when both are present."""
        braid = self.braid_word.strip()
        poly = self.alexander.strip()
        if not braid and not poly:
            raise SwknotError(f"row {self.name!r}: braid_word and alexander are both empty")
        if braid:
            knot = KnotInput(self.name, braid=BraidWord.parse(braid))
            if poly:
                from_braid = knot.alexander()
                given = normalize_alexander(LaurentPoly.parse(poly))
                if given != from_braid:
                    raise SwknotError(
                        f"row {self.name!r}: braid gives {from_braid} but alexander column says {given}"
                    )
            return knot
        return KnotInput(self.name, delta=LaurentPoly.parse(poly))


def _parse_table(stream: io.TextIOBase) -> list[TableRow]:
    reader = csv.DictReader(stream)
    if reader.fieldnames is None:
        raise SwknotError("knot table is empty (a header row is required)")
    header = [h.strip() for h in reader.fieldnames]
    missing = [c for c in TABLE_COLUMNS if c not in header]
    if missing:
        raise SwknotError(f"knot table is missing columns: {', '.join(missing)}")
    reader.fieldnames = header
    rows = []
    for rec in reader:
        rows.append(
            TableRow(
                name=(rec.get("name") or "").strip(),
                braid_word=rec.get("braid_word") or "",
                alexander=rec.get("alexander") or "",
                line=reader.line_num,
            )
        )
    return rows


def read_knot_table(path: str | Path) -> list[TableRow]:
    with open(path, newline="", encoding="utf-8") as fh:
        return _parse_table(fh)


def builtin_table() -> list[TableRow]:
    text = resources.files("swknot.data").joinpath("knots.csv").read_text(encoding="utf-8")
    return _parse_table(io.StringIO(text))


BUILTIN_SEIFERT: dict[str, SeifertMatrix] = {
    "unknot": SeifertMatrix(()),
    "trefoil": SeifertMatrix(((-1, 1), (0, -1))),
    "figure-8": SeifertMatrix(((1, 1), (0, -1))),
    "T(2,5)": SeifertMatrix(((-1, 1, 0, 0), (0, -1, 1, 0), (0, 0, -1, 1), (0, 0, 0, -1))),
    "5_2": SeifertMatrix(((-1, 1), (0, -2))),
}


def builtin_knot(name: str) -> KnotInput:
    for row in builtin_table():
        if row.name == name:
            return row.to_knot()
    names = ", ".join(r.name for r in builtin_table())
    raise SwknotError(f"unknown built-in knot {name!r} (known: {names})")


def builtin_names() -> list[str]:
    return [r.name for r in builtin_table()]
