import json
from math import gcd

import numpy as np
import pytest

from conftest import FIGURE8, T25, TREFOIL
from swknot.classify import (
    Outcome,
    Verdict,
    classify,
    classify_delta,
    dolgachev_series,
    minimality_check,
)
from swknot.errors import NotApplicableError
from swknot.knots import KnotInput, builtin_knot, builtin_table, random_alexander, torus_braid
from swknot.laurent import LaurentPoly
from swknot.swseries import SWSeries, sw_small_perturbation

P = LaurentPoly.parse


def test_unknot_rational_or_ruled():
    v = classify(builtin_knot("unknot"))
    assert v.outcome is Outcome.RATIONAL_OR_RULED
    assert not v.sw and not v.minimal


def test_trefoil_dolgachev():
    v = classify(builtin_knot("trefoil"))
    assert v.outcome is Outcome.DOLGACHEV and (v.p, v.q) == (2, 3)
    assert v.minimal
    assert v.label() == "DOLGACHEV(2,3)"
    assert any("SW-indistinguishable" in e for e in v.evidence)


def test_figure8_minimal_non_complex():
    v = classify(builtin_knot("figure-8"))
    assert v.outcome is Outcome.MINIMAL_NON_COMPLEX
    assert v.minimal and v.p is None and v.q is None


def test_non_monic_not_applicable():
    v = classify(builtin_knot("5_2"))
    assert v.outcome is Outcome.NOT_APPLICABLE
    assert not v.minimal
    assert v.sw  # data is still reported


def test_minimality_check():
    assert minimality_check(sw_small_perturbation(P(TREFOIL)))
    assert minimality_check(sw_small_perturbation(P("t^-3 - t^-2 + t^-1 - 1 + t - t^2 + t^3")))
    with pytest.raises(NotApplicableError):
        minimality_check(SWSeries())


def test_dolgachev_series():
    assert dict(dolgachev_series(2, 3).values) == {1: -1, -1: 1}
    assert dolgachev_series(2, 3) == classify(builtin_knot("trefoil")).sw
    assert dolgachev_series(2, 5).values[-1] == (3, -1)


@pytest.mark.parametrize("p, q", [(p, q) for p in range(2, 8) for q in range(p + 1, 8) if gcd(p, q) == 1])
def test_torus_braids_classify_as_dolgachev(p, q):
    v = classify(KnotInput(f"T({p},{q})", braid=torus_braid(p, q)))
    assert (v.outcome, v.p, v.q, v.minimal) == (Outcome.DOLGACHEV, p, q, True)


def test_builtin_table_outcomes():
    got = {r.name: classify(r.to_knot()).outcome for r in builtin_table()}
    non_complex = [n for n, o in got.items() if o is Outcome.MINIMAL_NON_COMPLEX]
    assert non_complex == ["figure-8"]
    assert [n for n, o in got.items() if o is Outcome.RATIONAL_OR_RULED] == ["unknot"]


def test_rational_only_for_trivial_delta():
    rng = np.random.default_rng(11)
    for _ in range(100):
        d = random_alexander(rng, int(rng.integers(1, 6)))
        v = classify_delta("r", d)
        assert v.outcome is not Outcome.RATIONAL_OR_RULED
        assert v.minimal
        assert bool(v.sw)


def test_verdict_invariants_and_evidence():
    for row in builtin_table():
        v = classify(row.to_knot())
        assert (v.outcome is Outcome.RATIONAL_OR_RULED) == (not v.sw) == (v.delta == P("1"))
        if v.outcome in (Outcome.DOLGACHEV, Outcome.MINIMAL_NON_COMPLEX):
            assert v.minimal
        assert v.evidence


def test_verdict_json_roundtrip_and_field_order():
    for row in builtin_table():
        v = classify(row.to_knot())
        data = json.loads(json.dumps(v.to_json()))
        assert list(data) == ["name", "alexander", "sw", "outcome", "p", "q", "minimal", "evidence"]
        assert Verdict.from_json(data) == v


def test_torus_polynomial_of_other_knot_is_dolgachev_type():
    # same polynomial as the trefoil via a Seifert-only presentation
    from swknot.knots import SeifertMatrix
    v = classify(KnotInput("other", seifert=SeifertMatrix(((-1, 1), (0, -1)))))
    assert v.outcome is Outcome.DOLGACHEV


def test_text_form():
    text = classify(builtin_knot("figure-8")).to_text()
    assert "outcome: MINIMAL_NON_COMPLEX" in text and f"alexander: {FIGURE8}" in text
    assert f"alexander: {T25}" in classify(builtin_knot("T(2,5)")).to_text()
