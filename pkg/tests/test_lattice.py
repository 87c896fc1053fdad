import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from swknot import _kernels
from swknot.errors import LatticeError, ParseError
from swknot.lattice import (
    E1,
    OMEGA0,
    TORUS,
    ClassVector,
    FourManifoldModel,
    adjunction_check,
    canonical_class,
    cone_product_check,
    cone_scan,
    formal_dimension,
    forward_cone_vectors,
    in_forward_cone,
    is_characteristic,
    pairing,
    positively_proportional,
    square,
)

vectors = st.lists(st.integers(-5, 5), min_size=10, max_size=10).map(lambda xs: ClassVector(tuple(xs)))
odd_vectors = st.lists(st.integers(-4, 4).map(lambda x: 2 * x + 1), min_size=10, max_size=10).map(
    lambda xs: ClassVector(tuple(xs)))


def test_model_invariants():
    assert E1.sigma == -8 and E1.euler == 12
    with pytest.raises(LatticeError):
        FourManifoldModel(sigma=-7)
    with pytest.raises(LatticeError):
        FourManifoldModel(euler=10)


def test_pairing_examples():
    assert pairing(TORUS, TORUS) == 0
    assert pairing(OMEGA0, OMEGA0) == 1
    assert pairing(TORUS, OMEGA0) == 3


@given(vectors, vectors, vectors, st.integers(-3, 3))
def test_pairing_bilinear_symmetric(a, b, c, k):
    assert pairing(a, b) == pairing(b, a)
    assert pairing(a + b, c) == pairing(a, c) + pairing(b, c)
    assert pairing(a * k, b) == k * pairing(a, b)


def test_characteristic_examples():
    assert is_characteristic(TORUS)
    assert not is_characteristic(TORUS * 2)
    assert is_characteristic(ClassVector.of(1, *[1] * 9))


def test_characteristic_matches_definition_on_basis():
    # c.x = x.x (mod 2) for every x; testing unit vectors and their sums suffices
    basis = [ClassVector(tuple(int(i == j) for j in range(10))) for i in range(10)]
    probes = basis + [a + b for a, b in itertools.combinations(basis, 2)]
    rng = np.random.default_rng(3)
    for _ in range(200):
        c = ClassVector(tuple(int(x) for x in rng.integers(-4, 5, 10)))
        by_def = all((pairing(c, x) - pairing(x, x)) % 2 == 0 for x in probes)
        assert is_characteristic(c) == by_def


@pytest.mark.parametrize("lam", [-9, -5, -3, -1, 1, 3, 7, 11])
def test_odd_multiples_of_torus(lam):
    assert is_characteristic(TORUS * lam)
    assert formal_dimension(TORUS * lam) == 0


@pytest.mark.parametrize("lam", [-4, -2, 0, 2, 6])
def test_even_multiples_not_characteristic(lam):
    assert not is_characteristic(TORUS * lam)
    with pytest.raises(LatticeError):
        formal_dimension(TORUS * lam)


def test_formal_dimension_examples():
    assert formal_dimension(ClassVector.of(1, *[1] * 9)) == -2
    assert formal_dimension(ClassVector.of(3, *[1] * 9)) == 0


@given(odd_vectors)
def test_wu_congruence(c):
    assert (square(c) - E1.sigma) % 8 == 0
    formal_dimension(c)


def test_cone_product_examples():
    r = cone_product_check(OMEGA0, OMEGA0)
    assert r.value == 1 and r.holds
    a, b = ClassVector.of(1, 1), ClassVector.of(2, 2)
    r = cone_product_check(a, b)
    assert r.value == 0 and r.proportional and r.holds
    r = cone_product_check(ClassVector.of(1, 1), ClassVector.of(1, -1))
    assert r.value == 2 and r.holds and not r.proportional


def test_cone_product_rejects_outside_cone():
    with pytest.raises(LatticeError):
        cone_product_check(ClassVector.of(-1), OMEGA0)
    with pytest.raises(LatticeError):
        cone_product_check(ClassVector.of(1, 2), OMEGA0)
    with pytest.raises(LatticeError):
        cone_product_check(ClassVector.of(0), OMEGA0)


def _brute_cone_vectors(bound):
    axis = range(-bound, bound + 1)
    out = []
    for h in range(1, bound + 1):
        for es in itertools.product(axis, repeat=9):
            if sum(e * e for e in es) <= h * h:
                out.append((h, *es))
    return out


def test_cone_enumeration_matches_brute_force_bound1():
    got = sorted(map(tuple, forward_cone_vectors(1).tolist()))
    assert got == sorted(_brute_cone_vectors(1))


def test_cone_enumeration_count_bound2():
    # h=1: 1 + 18; h=2: 1 + 18 + 144 + 672 + 2016 + 18 (sum of e_i^2 = 0..4)
    vs = forward_cone_vectors(2)
    assert vs.shape == (19 + 2869, 10)
    assert all(in_forward_cone(ClassVector(tuple(v))) for v in vs[::97].tolist())


def test_cone_scan_bound2():
    scan = cone_scan(2)
    assert scan.holds
    assert scan.vectors == 2888
    assert scan.min_value == 0


def test_cone_scan_kernels_agree():
    vs = forward_cone_vectors(1)
    form = np.array([1] + [-1] * 9)
    ids = np.arange(len(vs))
    ids[3] = ids[4]  # arbitrary labels; only agreement between kernels matters here
    assert _kernels.cone_pair_scan_numpy(vs, form, ids) == _kernels.cone_pair_scan_numba(vs, form, ids)


def test_cone_scan_pairwise_matches_lemma_check():
    vs = [ClassVector(tuple(v)) for v in forward_cone_vectors(1).tolist()]
    for a, b in itertools.combinations_with_replacement(vs, 2):
        assert cone_product_check(a, b).holds


def test_positively_proportional():
    assert positively_proportional(TORUS, TORUS * 3)
    assert not positively_proportional(TORUS, TORUS * -1)
    assert not positively_proportional(TORUS, OMEGA0)


def test_adjunction_examples():
    assert adjunction_check(1, TORUS, TORUS * 5)
    assert not adjunction_check(1, TORUS, ClassVector.of(1, *[1] * 9))
    null = ClassVector.of(1, 1)
    assert not adjunction_check(0, null, ClassVector.of(0, 0, 1))


def test_adjunction_rejects_bad_surface():
    with pytest.raises(LatticeError):
        adjunction_check(1, ClassVector.of(0, 1), TORUS)
    with pytest.raises(LatticeError):
        adjunction_check(1, ClassVector.of(0), TORUS)


@given(odd_vectors)
def test_adjunction_on_torus_accepts_exactly_orthogonal(c):
    assert adjunction_check(1, TORUS, c) == (pairing(c, TORUS) == 0)


def test_canonical_class():
    assert canonical_class(2) == TORUS
    assert canonical_class(4) == TORUS * 3
    with pytest.raises(LatticeError):
        canonical_class(3)


def test_class_vector_text():
    v = ClassVector.parse("(3; 1,1,1,1,1,1,1,1,1)")
    assert v == TORUS and str(v) == "(3; 1,1,1,1,1,1,1,1,1)"
    assert ClassVector.parse(str(ClassVector.of(-2, 0, 5))) == ClassVector.of(-2, 0, 5)
    for bad in ["3;1", "(3; 1,1)", "(a; 1,1,1,1,1,1,1,1,1)"]:
        with pytest.raises(ParseError):
            ClassVector.parse(bad)
    with pytest.raises(LatticeError):
        ClassVector((1, 2))
