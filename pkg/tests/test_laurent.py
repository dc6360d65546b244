import pytest
from hypothesis import given, settings, strategies as st

from skeinkit.errors import ZeroPolynomialError
from skeinkit.laurent import DELTA, ONE, ZERO, LaurentPoly2, delta_power

V = LaurentPoly2.monomial(1, v=1)
Z = LaurentPoly2.monomial(1, z=1)


def poly_strategy():
    term = st.tuples(
        st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
        st.integers(-9, 9),
    )
    return st.lists(term, max_size=6).map(LaurentPoly2)


def test_add_identity_and_cancellation():
    p = LaurentPoly2({(1, 1): 1, (0, -2): 3})
    assert p + ZERO == p
    vz = LaurentPoly2.monomial(1, 1, 1)
    assert vz + LaurentPoly2.monomial(-1, 1, 1) == ZERO
    # delta + (v - v^-1) z^-1 = 0
    other = LaurentPoly2({(1, -1): 1, (-1, -1): -1})
    assert DELTA + other == ZERO


def test_mul_inverse_monomials():
    assert LaurentPoly2.monomial(1, 1, 1) * LaurentPoly2.monomial(1, -1, -1) == ONE


def test_delta_squared_z_degrees():
    d2 = DELTA * DELTA
    assert d2.max_z_degree() == -2
    assert d2.min_z_degree() == -2


def test_delta_fifth_power_matches_binomial_expansion():
    # independent oracle: (v^-1 - v)^5 by the binomial theorem
    from math import comb

    expected = {}
    for k in range(6):
        coeff = comb(5, k) * (-1) ** k
        expected[(-(5 - k) + k, -5)] = coeff
    d5 = delta_power(5)
    assert d5 == LaurentPoly2(expected)
    assert d5.max_z_degree() == -5
    assert d5.v_support() == (-5, -3, -1, 1, 3, 5)


def test_delta_power_base_cases():
    assert delta_power(0) == ONE
    assert delta_power(1) == DELTA
    assert delta_power(5).min_z_degree() == -5
    with pytest.raises(ValueError):
        delta_power(-1)


def test_max_z_degree_errors_and_values():
    assert ONE.max_z_degree() == 0
    assert DELTA.max_z_degree() == -1
    with pytest.raises(ZeroPolynomialError):
        ZERO.max_z_degree()
    with pytest.raises(ZeroPolynomialError):
        ZERO.min_z_degree()


def test_substitute_v_inverse():
    assert DELTA.substitute_v_inverse() == -DELTA
    p = LaurentPoly2({(2, 1): 3, (-1, 0): 4})
    assert p.substitute_v_inverse().substitute_v_inverse() == p


def test_mirror_image_transform():
    # z-odd rows change sign, z-even rows do not
    assert DELTA.mirror_image() == DELTA
    p = LaurentPoly2({(1, 1): 1})
    assert p.mirror_image() == LaurentPoly2({(-1, 1): -1})
    q = LaurentPoly2({(2, 2): 7})
    assert q.mirror_image() == LaurentPoly2({(-2, 2): 7})


def test_format_canonical_ordering():
    p = LaurentPoly2({(1, -1): -1, (-1, -1): 1})
    assert p.format_text() == "1*v^-1*z^-1 + -1*v^1*z^-1"
    assert ZERO.format_text() == "0"


@given(poly_strategy())
@settings(max_examples=150, deadline=None)
def test_parse_format_round_trip(p):
    assert LaurentPoly2.parse_text(p.format_text()) == p


@given(poly_strategy())
@settings(max_examples=100, deadline=None)
def test_json_round_trip(p):
    assert LaurentPoly2.from_json_terms(p.to_json_terms()) == p


@given(poly_strategy(), poly_strategy(), poly_strategy())
@settings(max_examples=150, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + (-p) == ZERO
    assert p * ONE == p


@given(poly_strategy(), poly_strategy())
@settings(max_examples=150, deadline=None)
def test_substitute_v_inverse_is_ring_hom(p, q):
    assert (p + q).substitute_v_inverse() == p.substitute_v_inverse() + q.substitute_v_inverse()
    assert (p * q).substitute_v_inverse() == p.substitute_v_inverse() * q.substitute_v_inverse()


@given(poly_strategy(), poly_strategy())
@settings(max_examples=150, deadline=None)
def test_max_z_degree_additive_over_products(p, q):
    # integer coefficients form an integral domain, so leading z-rows
    # cannot cancel
    if p.is_zero or q.is_zero:
        assert (p * q).is_zero
    else:
        assert (p * q).max_z_degree() == p.max_z_degree() + q.max_z_degree()
        assert (p * q).min_z_degree() == p.min_z_degree() + q.min_z_degree()


def test_max_z_degree_additive_on_delta_powers():
    for a in range(4):
        for b in range(4):
            assert (delta_power(a) * delta_power(b)).max_z_degree() == -(a + b) or (a + b) == 0


def test_power_and_scalars():
    assert (V + Z) ** 2 == V * V + 2 * V * Z + Z * Z
    assert 3 * V == LaurentPoly2.monomial(3, v=1)
    assert V - V == ZERO
    with pytest.raises(ValueError):
        V ** -1
