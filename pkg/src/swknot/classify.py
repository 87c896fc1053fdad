"""Turn an Alexander polynomial into a verdict about E(1)_K.

Decision tree on the normalized Δ:

* Δ not monic             -> NOT_APPLICABLE (the knot cannot be fibered)
* Δ = 1                   -> RATIONAL_OR_RULED (SW° vanishes)
* Δ = Δ of T(p, q)        -> DOLGACHEV(p, q), minimal
* otherwise               -> MINIMAL_NON_COMPLEX

The verdict only speaks about what SW° can distinguish.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import NotApplicableError
from .knots import KnotInput, is_fibered_candidate, match_torus, torus_alexander
from .laurent import LaurentPoly
from .swseries import SWSeries, basic_class_differences_square, genus, sw_small_perturbation


class Outcome(str, enum.Enum):
    RATIONAL_OR_RULED = "RATIONAL_OR_RULED"
    DOLGACHEV = "DOLGACHEV"
    MINIMAL_NON_COMPLEX = "MINIMAL_NON_COMPLEX"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class Verdict:
    knot_name: str
    delta: LaurentPoly
    sw: SWSeries
    outcome: Outcome
    minimal: bool
    p: int | None = None
    q: int | None = None
    evidence: tuple[str, ...] = field(default_factory=tuple)

    def label(self) -> str:
        if self.outcome is Outcome.DOLGACHEV:
            return f"DOLGACHEV({self.p},{self.q})"
        return self.outcome.value

    def to_json(self) -> dict:
        # field order is part of the output format
        return {
            "name": self.knot_name,
            "alexander": str(self.delta),
            "sw": self.sw.to_records(),
            "outcome": self.outcome.value,
            "p": self.p,
            "q": self.q,
            "minimal": self.minimal,
            "evidence": list(self.evidence),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Verdict":
        return cls(
            knot_name=data["name"],
            delta=LaurentPoly.parse(data["alexander"]),
            sw=SWSeries.from_records(data["sw"]),
            outcome=Outcome(data["outcome"]),
            minimal=bool(data["minimal"]),
            p=data.get("p"),
            q=data.get("q"),
            evidence=tuple(data.get("evidence", ())),
        )

    def to_text(self) -> str:
        lines = [
            f"name: {self.knot_name}",
            f"alexander: {self.delta}",
            f"sw: {self.sw.pretty()}",
            f"outcome: {self.label()}",
            f"minimal: {'true' if self.minimal else 'false'}",
        ]
        lines += [f"evidence: {e}" for e in self.evidence]
        return "\n".join(lines)


def minimality_check(sw: SWSeries) -> bool:
    """No two basic classes differ by a class of square -4."""
    if not sw:
        raise NotApplicableError("minimality via basic classes is vacuous for an empty series")
    return all(sq != -4 for sq in basic_class_differences_square(sw))


def dolgachev_series(p: int, q: int) -> SWSeries:
    """SW° of the Dolgachev surface E(1; p, q), i.e. of E(1)_K for K = T(p, q)."""
    return sw_small_perturbation(torus_alexander(p, q))


def classify_delta(name: str, delta: LaurentPoly) -> Verdict:
    """Classify from a normalized Alexander polynomial."""
    if not is_fibered_candidate(delta):
        sw = sw_small_perturbation(delta, require_monic=False)
        return Verdict(
            name, delta, sw, Outcome.NOT_APPLICABLE, minimal=False,
            evidence=(
                f"fibered-screen: leading coefficient {delta.leading_coefficient()} is not +-1, "
                "so K is not fibered and no classification is made; SW data is informational",
            ),
        )

    sw = sw_small_perturbation(delta)
    if delta.span() == 0:
        return Verdict(
            name, delta, sw, Outcome.RATIONAL_OR_RULED, minimal=False,
            evidence=("rational-or-ruled: Alexander polynomial is trivial, SW0 = 0",),
        )

    evidence = [f"nontrivial-alexander: SW0 has {len(sw)} basic classes, so not rational or ruled"]
    g = genus(delta)
    top_lam, top_val = sw.values[-1]
    evidence.append(f"canonical-class: top basic class {top_lam}[T] = (2g-1)[T] with SW0 = {top_val:+d}")
    minimal = minimality_check(sw)
    pairs = len(sw) * (len(sw) - 1) // 2
    evidence.append(
        f"minimality: all {pairs} basic-class differences square to 0, none to -4"
        if minimal else "minimality: some basic-class difference squares to -4"
    )

    pq = match_torus(delta)
    if pq is not None:
        p, q = pq
        evidence.append(
            f"torus-polynomial: Delta equals the T({p},{q}) polynomial; "
            f"SW-indistinguishable from the Dolgachev surface E(1;{p},{q})"
        )
        return Verdict(name, delta, sw, Outcome.DOLGACHEV, minimal, p, q, tuple(evidence))

    evidence.append(
        f"non-torus-polynomial: Delta (genus {g}) differs from every torus knot polynomial, "
        "so E(1)_K admits no complex structure"
    )
    return Verdict(name, delta, sw, Outcome.MINIMAL_NON_COMPLEX, minimal, evidence=tuple(evidence))


def classify(knot: KnotInput) -> Verdict:
    return classify_delta(knot.name, knot.alexander())
