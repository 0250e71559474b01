import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isofib.errors import DegenerateDerivation, InvalidInput, NonExtendable
from isofib.ffpoly import Derivation1D, LaurentPoly, Poly, field, parse_poly
from isofib.foliation import (ALBANESE_NOTE, ProductDerivation, back_to_affine, canonical_pullback_degree,
                              example_derivation, example_kodaira, extend_to_infinity, foliation_data,
                              supersingular_curve, vanishing_locus)

PRIMES = [2, 3, 5, 7, 11, 13]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_x_to_the_p_kills_every_polynomial_after_p_steps(p):
    # check the operator itself, not only its value on t
    F = field(p)
    d = Derivation1D(Poly.monomial(F, p))
    for n in range(0, 3 * p):
        f = Poly.monomial(F, n) + Poly.monomial(F, n // 2 + 1, 2)
        assert d.iterate(f, p).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_euler_operator_is_idempotent_under_p_th_power(p):
    F = field(p)
    d = Derivation1D(Poly.t(F))
    for n in range(0, 2 * p + 2):
        f = Poly.monomial(F, n)
        assert d.iterate(f, p) == d(f)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_vanishing_locus_of_x_to_the_p(p):
    F = field(p)
    assert [(r.code, m) for r, m in vanishing_locus(Derivation1D(Poly.monomial(F, p)))] == [(0, p)]


def test_vanishing_locus_multiplicities():
    F = field(5)
    f = parse_poly("t^3 + 3t^2 + 2t", F) * parse_poly("t + 4", F)  # t (t+1) (t+2) (t-1)
    roots = {r.code: m for r, m in vanishing_locus(Derivation1D(f))}
    assert roots == {0: 1, 1: 1, 3: 1, 4: 1}
    sq = parse_poly("t + 4", F) ** 3
    assert {r.code: m for r, m in vanishing_locus(Derivation1D(sq))} == {1: 3}
    assert vanishing_locus(Derivation1D(parse_poly("t^2 + 2", F))) == []  # irreducible over F_5
    with pytest.raises(DegenerateDerivation):
        vanishing_locus(Derivation1D(Poly(F, [])))


@pytest.mark.parametrize("p", PRIMES)
def test_example_extension_by_hand(p):
    # x^p d/dx = -t^(2-p) d/dt, so t^(p-2) clears the pole and c1 = 2 - p
    d = example_derivation(p)
    ext = extend_to_infinity(d)
    F = field(p)
    assert ext.rescale_exponent == p - 2
    assert ext.c1_p2_degree == 2 - p
    assert ext.generator.affine_coeff == -LaurentPoly.monomial(F, 0)
    assert ext.generator.elliptic_coeff == LaurentPoly.monomial(F, p - 2)
    assert canonical_pullback_degree(p, -2, ext.c1_p2_degree) == p * (p - 3)
    data = foliation_data(d)
    assert data.overlap_consistent()


@pytest.mark.parametrize("p", PRIMES)
def test_example_is_additive_and_smooth(p):
    d = example_derivation(p)
    assert d.is_additive()
    assert d.is_nowhere_vanishing()
    assert supersingular_curve(p).is_supersingular()


def test_unit_derivation_plus_elliptic_part_extends():
    F = field(2)
    d = ProductDerivation(supersingular_curve(2), Poly.constant(F, 1), Poly.constant(F, 1))
    ext = extend_to_infinity(d)
    assert ext.rescale_exponent == 0 and ext.c1_p2_degree == 0


def test_high_order_pole_is_not_extendable():
    F = field(2)
    d = ProductDerivation(supersingular_curve(2), Poly.monomial(F, 10), Poly.constant(F, 1))
    with pytest.raises(NonExtendable):
        extend_to_infinity(d)
    assert extend_to_infinity(d, max_exponent=8).rescale_exponent == 8


@settings(max_examples=60)
@given(st.sampled_from([3, 5]), st.data())
def test_extension_round_trips_through_the_overlap(p, data):
    F = field(p)
    g = Poly.from_codes(F, data.draw(st.lists(st.integers(0, p - 1), max_size=5)))
    h = Poly.from_codes(F, data.draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=3)))
    if g.is_zero() and h.is_zero():
        return
    d = ProductDerivation(supersingular_curve(p), g, h)
    ext = extend_to_infinity(d, max_exponent=10)
    m = ext.rescale_exponent
    back = back_to_affine(ext)
    assert back.affine_coeff == d.affine_coeff.shift(-m)
    assert back.elliptic_coeff == d.elliptic_coeff.shift(-m)
    assert ext.generator.is_regular() and not ext.generator.vanishes_at_origin()


def test_pullback_degree_needs_a_prime():
    with pytest.raises(InvalidInput):
        canonical_pullback_degree(4, -2, 0)


@pytest.mark.parametrize("p,degree", [(2, -2), (3, 0), (5, 10), (7, 28), (11, 88), (13, 130)])
def test_example_kodaira(p, degree):
    v = example_kodaira(p)
    assert v.pullback_degree == degree
    if p == 2:
        assert v.verdict == "not nef" and not v.nef
    elif p == 3:
        assert v.kappa == "unasserted"
    else:
        assert v.kappa == 1 and v.trace["note"] == ALBANESE_NOTE
    assert v.to_json()["p"] == p


def test_example_kodaira_rejects_composites():
    with pytest.raises(InvalidInput):
        example_kodaira(9)
