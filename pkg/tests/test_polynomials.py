from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trisectagon import (
    DomainError,
    HEPTAGON_RADIUS_CUBIC,
    HEPTAGON_RADIUS_SEXTIC,
    HEPTAGON_RADIUS_SEXTIC_PRINTED,
    InvalidArgumentError,
    QuadPoly,
    RatPoly,
    RootThirteen,
    TRIDECAGON_CUBIC_FACTOR,
    TRIDECAGON_CUBIC_FACTOR_PRINTED,
    TRIDECAGON_RADIUS_POLY,
    TRIDECAGON_RADIUS_SEXTIC,
    descend_palindromic,
    eval_poly,
    eval_scale,
    expand_conjugate_product,
    is_palindromic,
    lift_descent,
    poly_from_json,
    poly_roots_numeric,
    poly_to_json,
)


def test_ratpoly_normalization():
    assert RatPoly(1, 2, 0, 0).coeffs == (Fraction(1), Fraction(2))
    assert RatPoly(0, 0).is_zero
    assert RatPoly().degree == -1
    assert RatPoly(3).degree == 0


def test_ratpoly_arithmetic():
    p = RatPoly(1, 1)
    assert p * p == RatPoly(1, 2, 1)
    assert p + RatPoly(-1, -1) == RatPoly()
    assert RatPoly(2, 0, 1).eval_exact(3) == 11


def test_is_palindromic():
    assert is_palindromic(RatPoly(1, 3, 1))
    assert not is_palindromic(RatPoly(2, 3, 1))
    # the published heptagon sextic fails the palindrome test: this is
    # the first inconsistency signal
    assert not is_palindromic(HEPTAGON_RADIUS_SEXTIC_PRINTED)
    assert is_palindromic(HEPTAGON_RADIUS_SEXTIC)
    assert is_palindromic(TRIDECAGON_RADIUS_POLY)


def test_lift_descent_trivial():
    assert lift_descent(RatPoly(0, 1), 1) == RatPoly(1, 0, 1)


def test_lift_descent_heptagon_cubic():
    lifted = lift_descent(HEPTAGON_RADIUS_CUBIC, 3)
    assert lifted == HEPTAGON_RADIUS_SEXTIC
    assert lifted != HEPTAGON_RADIUS_SEXTIC_PRINTED
    # the published linear coefficient is -6; the exact expansion gives +6
    assert lifted.coefficient(1) == 6
    assert HEPTAGON_RADIUS_SEXTIC_PRINTED.coefficient(1) == -6


def test_lift_descent_tridecagon_sextic():
    lifted = lift_descent(TRIDECAGON_RADIUS_SEXTIC, 6)
    assert lifted == TRIDECAGON_RADIUS_POLY
    # published degree-12 polynomial and sextic are mutually consistent
    assert TRIDECAGON_RADIUS_POLY.eval_exact(1) == TRIDECAGON_RADIUS_SEXTIC.eval_exact(2) == 729
    assert TRIDECAGON_RADIUS_POLY.eval_exact(-1) == TRIDECAGON_RADIUS_SEXTIC.eval_exact(-2) == 13


def test_lift_descent_rejects_degree_mismatch():
    with pytest.raises(InvalidArgumentError):
        lift_descent(RatPoly(0, 1), 2)


def test_descend_palindromic_trivial():
    pair = descend_palindromic(RatPoly(1, 0, 1))
    assert pair.Q == RatPoly(0, 1)
    assert pair.m == 1


def test_descend_palindromic_heptagon():
    pair = descend_palindromic(HEPTAGON_RADIUS_SEXTIC)
    assert pair.Q == HEPTAGON_RADIUS_CUBIC
    assert pair.m == 3


def test_descend_palindromic_tridecagon():
    pair = descend_palindromic(TRIDECAGON_RADIUS_POLY)
    assert pair.Q == TRIDECAGON_RADIUS_SEXTIC
    assert pair.m == 6


def test_descend_palindromic_rejects_non_palindrome():
    with pytest.raises(DomainError, match="degree 1 is -6"):
        descend_palindromic(HEPTAGON_RADIUS_SEXTIC_PRINTED)


def test_descend_palindromic_rejects_odd_degree():
    with pytest.raises(DomainError, match="even degree"):
        descend_palindromic(RatPoly(1, 2, 2, 1))


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.fractions(min_value=-30, max_value=30, max_denominator=6),
        min_size=1,
        max_size=7,
    ),
    st.fractions(min_value=-30, max_value=30, max_denominator=6).filter(lambda x: x != 0),
)
def test_descent_round_trip(low_coeffs, leading):
    q = RatPoly(tuple(low_coeffs) + (leading,))
    m = q.degree
    lifted = lift_descent(q, m)
    assert is_palindromic(lifted)
    assert lifted.degree == 2 * m
    pair = descend_palindromic(lifted)
    assert pair.Q == q
    assert lift_descent(pair.Q, pair.m) == lifted


def test_descent_roots_map_to_cubic(ctx):
    # every root r of the lifted polynomial gives a cubic root r + 1/r
    roots = poly_roots_numeric(HEPTAGON_RADIUS_SEXTIC, ctx)
    for r in roots:
        s = r + 1 / r
        value = eval_poly(HEPTAGON_RADIUS_CUBIC, s, ctx)
        assert abs(value) < ctx.tolerance * eval_scale(HEPTAGON_RADIUS_CUBIC, s, ctx)


def test_root_thirteen_ring():
    x = RootThirteen(2, 3)
    y = RootThirteen(Fraction(1, 2), -1)
    assert x + y == RootThirteen(Fraction(5, 2), 2)
    assert x * y == RootThirteen(1 - 39, Fraction(3, 2) - 2)
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert x.conjugate().conjugate() == x
    assert 2 * x == RootThirteen(4, 6)


def test_root_thirteen_sign():
    assert RootThirteen(0, 0).sign() == 0
    assert RootThirteen(-7, 2).sign() > 0  # 2*sqrt(13) > 7
    assert RootThirteen(7, -2).sign() < 0
    assert RootThirteen(-4, 1).sign() < 0  # sqrt(13) < 4
    assert RootThirteen(4, -1).sign() > 0


def test_root_thirteen_sqrt():
    target = RootThirteen(Fraction(31, 8), Fraction(7, 8))
    root = target.sqrt()
    assert root == RootThirteen(Fraction(7, 4), Fraction(1, 4))
    assert root * root == target
    assert RootThirteen(13, 0).sqrt() == RootThirteen(0, 1)
    assert RootThirteen(Fraction(9, 4), 0).sqrt() == RootThirteen(Fraction(3, 2), 0)
    assert RootThirteen(2, 0).sqrt() is None
    assert RootThirteen(Fraction(31, 4), Fraction(7, 4)).sqrt() is None
    assert RootThirteen(-1, 0).sqrt() is None


def test_expand_conjugate_product_trivial():
    product = expand_conjugate_product(QuadPoly(RootThirteen(0, 1), RootThirteen(1, 0)))
    assert product == RatPoly(-13, 0, 1)


def test_expand_conjugate_product_corrected_factor():
    assert expand_conjugate_product(TRIDECAGON_CUBIC_FACTOR) == TRIDECAGON_RADIUS_SEXTIC


def test_expand_conjugate_product_printed_constant_fails():
    product = expand_conjugate_product(TRIDECAGON_CUBIC_FACTOR_PRINTED)
    assert product != TRIDECAGON_RADIUS_SEXTIC
    # (15^2 - 107^2 * 13) / 4
    assert product.coefficient(0) == -37153
    assert TRIDECAGON_RADIUS_SEXTIC.coefficient(0) == 2131


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.integers(min_value=-9, max_value=9),
            st.integers(min_value=-9, max_value=9),
        ),
        min_size=1,
        max_size=5,
    )
)
def test_expand_conjugate_product_always_rational(pairs):
    poly = QuadPoly(tuple(RootThirteen(a, b) for a, b in pairs))
    product = expand_conjugate_product(poly)
    # palindrome of norms: evaluating anywhere rational stays rational
    assert all(isinstance(c, Fraction) for c in product.coeffs)


def test_eval_poly_at_root(ctx):
    root = poly_roots_numeric(HEPTAGON_RADIUS_CUBIC, ctx)[2]
    value = eval_poly(HEPTAGON_RADIUS_CUBIC, root, ctx)
    assert abs(value) < ctx.real(10) ** -40 * eval_scale(HEPTAGON_RADIUS_CUBIC, root, ctx)


def test_eval_poly_gaussian_unit(ctx):
    assert abs(eval_poly(RatPoly(1, 0, 1), ctx.complex(0, 1), ctx)) < ctx.tolerance


def test_eval_poly_quadratic_field_constant(ctx):
    assert abs(eval_poly(TRIDECAGON_RADIUS_SEXTIC, ctx.complex(0), ctx) - 2131) < ctx.tolerance
    value = eval_poly(TRIDECAGON_CUBIC_FACTOR, ctx.complex(0), ctx)
    expected = (107 + 15 * ctx.mp.sqrt(ctx.mp.mpf(13))) / 2
    assert abs(value - expected) < ctx.tolerance


def test_poly_json_round_trip():
    poly = RatPoly(Fraction(1, 2), -3, Fraction(7, 5))
    data = poly_to_json(poly)
    assert data == ["1/2", "-3", "7/5"]
    assert poly_from_json(data) == poly

    quad = QuadPoly(RootThirteen(Fraction(107, 2), Fraction(15, 2)), RootThirteen(1, 0))
    quad_data = poly_to_json(quad)
    assert quad_data == [["107/2", "15/2"], ["1", "0"]]
    assert poly_from_json(quad_data) == quad


def test_poly_json_rejects_bad_input():
    with pytest.raises(InvalidArgumentError):
        poly_from_json({"not": "a list"})
    with pytest.raises(InvalidArgumentError):
        poly_from_json([["1", "2", "3"]])
