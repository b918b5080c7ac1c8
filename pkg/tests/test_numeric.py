import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trisectagon import (
    DomainError,
    InvalidArgumentError,
    RatPoly,
    cube_roots_of_unity,
    make_context,
    poly_roots_numeric,
    roots_of_unity,
    solve_cubic_trig,
    trisect_unit,
)

# 32-digit anchors computed with an independent 80-digit run (mpmath
# polyroots for the cubic; direct radicals elsewhere).
THETA7_DEG = "-79.10660535086909439451747474013"
Q7_ROOTS = (
    "-6.4058132074145147574166139170447",
    "-2.3351256037378864257334153869808",
    "2.7409388111524011831500293040254",
)
EPS1_IM = "0.86602540378443864676372317075294"


def test_context_tolerance_by_definition():
    assert make_context(50).tolerance == make_context(50).mp.mpf(10) ** -40
    assert make_context(16).tolerance == make_context(16).mp.mpf(10) ** -6


def test_context_rejects_low_precision():
    with pytest.raises(InvalidArgumentError):
        make_context(10)
    with pytest.raises(InvalidArgumentError):
        make_context(15)


def test_context_tolerance_monotone():
    previous = None
    for digits in (16, 20, 50, 100):
        tolerance = make_context(digits).tolerance
        assert tolerance > 0
        if previous is not None:
            assert tolerance < previous
        previous = tolerance


def test_context_is_immutable(ctx):
    with pytest.raises(AttributeError):
        ctx.digits = 60


def test_cube_roots_of_unity(ctx):
    eps = cube_roots_of_unity(ctx)
    tol = ctx.tolerance
    assert eps[0] == 1
    assert abs(eps[1] - ctx.complex("-0.5", EPS1_IM)) < ctx.real(10) ** -31
    assert abs(eps[1] ** 3 - 1) < tol
    assert abs(eps[2] - eps[1] ** 2) < tol
    assert abs(eps[1] * eps[2] - 1) < tol
    assert abs(eps[0] + eps[1] + eps[2]) < tol


def test_trisect_unit_trivial_angle(ctx):
    result = trisect_unit(ctx.complex(1), ctx)
    eps = cube_roots_of_unity(ctx)
    assert result.theta == 0
    for k in range(3):
        assert abs(result.zetas[k] - eps[k]) < ctx.tolerance


def test_trisect_unit_pi(ctx):
    result = trisect_unit(ctx.complex(-1), ctx)
    assert abs(result.theta - ctx.mp.pi) < ctx.tolerance
    expected = ctx.mp.mpc(ctx.mp.cos(ctx.mp.pi / 3), ctx.mp.sin(ctx.mp.pi / 3))
    assert abs(result.zetas[0] - expected) < ctx.tolerance


def test_trisect_unit_principal_branch(ctx):
    mp = ctx.mp
    z = mp.mpc(mp.cos(mp.mpf(2)), mp.sin(mp.mpf(2)))
    result = trisect_unit(z, ctx)
    assert -mp.pi / 3 < mp.atan2(result.zetas[0].imag, result.zetas[0].real) <= mp.pi / 3


def test_trisect_unit_rejects_non_unit(ctx):
    with pytest.raises(InvalidArgumentError, match=r"\|z\| - 1"):
        trisect_unit(ctx.complex("1.01"), ctx)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=-3.14, max_value=3.14))
def test_trisection_reconstructs_input(angle):
    ctx = make_context(50)
    mp = ctx.mp
    z = mp.mpc(mp.cos(mp.mpf(angle)), mp.sin(mp.mpf(angle)))
    result = trisect_unit(z, ctx)
    for k in range(3):
        assert abs(abs(result.zetas[k]) - 1) < ctx.tolerance
        assert abs(result.zetas[k] ** 3 - z) < ctx.tolerance


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=-3.1, max_value=3.1))
def test_trisection_commutes_with_conjugation(angle):
    ctx = make_context(50)
    mp = ctx.mp
    z = mp.mpc(mp.cos(mp.mpf(angle)), mp.sin(mp.mpf(angle)))
    direct = trisect_unit(z.conjugate(), ctx).zetas[0]
    swapped = trisect_unit(z, ctx).zetas[0].conjugate()
    assert abs(direct - swapped) < ctx.tolerance


def test_heptagon_angle_value(ctx):
    mp = ctx.mp
    z = mp.mpc(1, -3 * mp.sqrt(mp.mpf(3))) / (2 * mp.sqrt(mp.mpf(7)))
    result = trisect_unit(z, ctx)
    assert abs(result.theta * 180 / mp.pi - mp.mpf(THETA7_DEG)) < mp.mpf(10) ** -29
    # components of the principal root agree with a higher-precision run
    ctx_hi = make_context(100)
    z_hi = ctx_hi.mp.mpc(1, -3 * ctx_hi.mp.sqrt(ctx_hi.mp.mpf(3))) / (
        2 * ctx_hi.mp.sqrt(ctx_hi.mp.mpf(7))
    )
    hi = trisect_unit(z_hi, ctx_hi)
    assert abs(result.zetas[0] - hi.zetas[0]) < ctx.tolerance


def test_solve_cubic_trig_heptagon_cubic(ctx):
    roots = solve_cubic_trig(6, -9, -41, ctx)
    assert roots[0] < roots[1] < roots[2]
    for root, anchor in zip(roots, Q7_ROOTS):
        assert abs(root - ctx.real(anchor)) < ctx.real(10) ** -29
    assert abs(sum(roots, ctx.real(0)) + 6) < ctx.tolerance


def test_solve_cubic_trig_factored(ctx):
    roots = solve_cubic_trig(0, -3, 0, ctx)
    sqrt3 = ctx.mp.sqrt(ctx.mp.mpf(3))
    for root, expected in zip(roots, (-sqrt3, ctx.real(0), sqrt3)):
        assert abs(root - expected) < ctx.tolerance


def test_solve_cubic_trig_rejects_complex_case(ctx):
    with pytest.raises(DomainError, match="discriminant"):
        solve_cubic_trig(0, 3, 1, ctx)


def test_solve_cubic_trig_triple_root(ctx):
    roots = solve_cubic_trig(-3, 3, -1, ctx)
    for root in roots:
        assert abs(root - 1) < ctx.tolerance


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.floats(min_value=-8, max_value=8).map(lambda x: round(x, 3)),
        min_size=3,
        max_size=3,
    )
)
def test_solve_cubic_trig_postcondition(raw_roots):
    ctx = make_context(50)
    mp = ctx.mp
    r = sorted(mp.mpf(x) for x in raw_roots)
    a = -(r[0] + r[1] + r[2])
    b = r[0] * r[1] + r[0] * r[2] + r[1] * r[2]
    c = -(r[0] * r[1] * r[2])
    roots = solve_cubic_trig(a, b, c, ctx)
    assert list(roots) == sorted(roots)
    scale = max(mp.mpf(1), abs(a), abs(b), abs(c)) ** 3
    for root in roots:
        assert abs(root**3 + a * root**2 + b * root + c) < ctx.tolerance * scale


def test_roots_of_unity_small_orders(ctx):
    assert roots_of_unity(1, ctx) == (ctx.complex(1),)
    quartic = roots_of_unity(4, ctx)
    expected = (ctx.complex(1), ctx.complex(0, 1), ctx.complex(-1), ctx.complex(0, -1))
    for got, want in zip(quartic, expected):
        assert abs(got - want) < ctx.tolerance


def test_roots_of_unity_structure(ctx):
    roots = roots_of_unity(7, ctx)
    omega = roots[1]
    assert abs(omega.real - ctx.real("0.62348980185873353052500488400424")) < ctx.real(10) ** -31
    assert abs(omega.imag - ctx.real("0.78183148246802980870844452667406")) < ctx.real(10) ** -31
    power = ctx.complex(1)
    for k in range(7):
        assert abs(roots[k] - power) < ctx.tolerance
        assert abs(abs(roots[k]) - 1) < ctx.tolerance
        power = power * omega


def test_roots_of_unity_rejects_nonpositive(ctx):
    with pytest.raises(InvalidArgumentError):
        roots_of_unity(0, ctx)


def test_poly_roots_numeric_quadratic(ctx):
    roots = poly_roots_numeric(RatPoly(-1, 0, 1), ctx)
    assert len(roots) == 2
    assert abs(roots[0] + 1) < ctx.tolerance
    assert abs(roots[1] - 1) < ctx.tolerance


def test_poly_roots_numeric_matches_trig_solver(ctx):
    # oracle equivalence: two independent routes to the same cubic
    numeric = poly_roots_numeric(RatPoly(-41, -9, 6, 1), ctx)
    trig = solve_cubic_trig(6, -9, -41, ctx)
    for a, b in zip(numeric, trig):
        assert abs(a - b) < ctx.tolerance


def test_poly_roots_numeric_palindromic_sextic(ctx):
    roots = poly_roots_numeric(RatPoly(1, 6, -6, -29, -6, 6, 1), ctx)
    assert len(roots) == 6
    for root in roots:
        assert abs(root.imag) < ctx.tolerance
        inverse = 1 / root
        assert any(abs(other - inverse) < ctx.tolerance for other in roots)


def test_poly_roots_numeric_rejects_degenerate(ctx):
    with pytest.raises(InvalidArgumentError):
        poly_roots_numeric(RatPoly(), ctx)
    with pytest.raises(InvalidArgumentError):
        poly_roots_numeric(RatPoly(5), ctx)


def test_precision_stability_50_vs_100(ctx, ctx100):
    for context in (ctx,):
        mp = context.mp
        z = mp.mpc(1, -3 * mp.sqrt(mp.mpf(3))) / (2 * mp.sqrt(mp.mpf(7)))
        low = trisect_unit(z, context)
        mp_hi = ctx100.mp
        z_hi = mp_hi.mpc(1, -3 * mp_hi.sqrt(mp_hi.mpf(3))) / (2 * mp_hi.sqrt(mp_hi.mpf(7)))
        high = trisect_unit(z_hi, ctx100)
        assert abs(low.theta - high.theta) < ctx.real(10) ** -40
        for k in range(3):
            assert abs(low.zetas[k] - high.zetas[k]) < ctx.real(10) ** -40
