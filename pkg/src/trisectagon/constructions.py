"""Triangle constructions for the regular heptagon and triskaidecagon.

Each construction places three polygon vertices as V_j = R1*eps_j +
R2*zeta_{pairing(j)}, where eps_k are the cube roots of unity and zeta_k
the three cube roots of a unit-modulus number (one angle trisection).
Type I uses a nontrivial trisection and two closed-form radii; Type II
trisects angle zero and draws its second radius from a ladder of real
roots of a palindromic polynomial; Type III is the Type II picture with
a negative radius and the trisection of angle pi.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidArgumentError, PrecisionError
from .numeric import (
    CubeRootsOfUnity,
    PrecComplex,
    PrecReal,
    PrecisionContext,
    TrisectionResult,
    context_of,
    cube_roots_of_unity,
    trisect_unit,
)
from .polynomials import QuadPoly, RatPoly, RootThirteen


class ConstructionKind(str, Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"


# Vertex j takes trisection branch pairing[j]; the swap in the first two
# entries (relative to the identity) is what closes the three
# parallelograms onto polygon vertices.
CANONICAL_PAIRING = (1, 0, 2)

HEPTAGON_COSET = frozenset({1, 2, 4})

# Cosets of the order-3 subgroup {1, 3, 9} mod 13 realized by the four
# family/mirror combinations of the 13-gon Type I construction.
TRIDECAGON_COSETS = {
    ("plus", False): frozenset({1, 3, 9}),
    ("plus", True): frozenset({4, 10, 12}),
    ("minus", False): frozenset({2, 5, 6}),
    ("minus", True): frozenset({7, 8, 11}),
}

FAMILIES = ("plus", "minus")
CONVENTIONS = ("corrected", "printed")

# Radius polynomials.  The *_PRINTED variants carry published coefficient
# lists that the erratum oracles adjudicate; the unsuffixed forms are the
# derived (corrected) ones actually used by the ladders.
HEPTAGON_RADIUS_SEXTIC = RatPoly(1, 6, -6, -29, -6, 6, 1)
HEPTAGON_RADIUS_SEXTIC_PRINTED = RatPoly(1, -6, -6, -29, -6, 6, 1)
HEPTAGON_RADIUS_CUBIC = RatPoly(-41, -9, 6, 1)

TRIDECAGON_RADIUS_POLY = RatPoly(
    1, 12, -12, -274, -441, 441, 1275, 441, -441, -274, -12, 12, 1
)
TRIDECAGON_RADIUS_SEXTIC = RatPoly(2131, 1323, -384, -334, -18, 12, 1)
TRIDECAGON_CUBIC_FACTOR = QuadPoly(
    RootThirteen(Fraction(107, 2), Fraction(15, 2)),
    RootThirteen(Fraction(63, 2), Fraction(21, 2)),
    RootThirteen(6, 3),
    RootThirteen(1, 0),
)
TRIDECAGON_CUBIC_FACTOR_PRINTED = QuadPoly(
    RootThirteen(Fraction(15, 2), Fraction(107, 2)),
    RootThirteen(Fraction(63, 2), Fraction(21, 2)),
    RootThirteen(6, 3),
    RootThirteen(1, 0),
)


@dataclass(frozen=True)
class TriangleConstruction:
    """One assembled construction: radii, trisection, pairing, vertices."""

    p: int
    kind: ConstructionKind
    R1: PrecReal
    R2: PrecReal
    theta: PrecReal
    zetas: TrisectionResult
    pairing: tuple[int, int, int]
    vertices: tuple[PrecComplex, PrecComplex, PrecComplex]
    coset_label: frozenset[int] | None = None
    family: str | None = None
    mirror: bool | None = None
    ladder_index: int | None = None


@dataclass(frozen=True)
class RootLadder:
    """The real radii of a Type II construction, indexed by trisection branch.

    Radii come in inverse pairs (indices k and k+3 within a family block
    multiply to 1).  For the 13-gon, indices 0-5 belong to the "+" family
    and 6-11 to the "-" family.  Under the literal published radical
    convention two 13-gon entries are a complex-conjugate pair; the
    corrected convention keeps every radius real.
    """

    p: int
    s_values: tuple[PrecReal, ...]
    radii: tuple
    family_of: tuple[str | None, ...]
    convention: str | None = None


def assemble_vertices(
    R1,
    R2,
    zetas: TrisectionResult,
    pairing: tuple[int, int, int],
    ctx: PrecisionContext,
) -> tuple[PrecComplex, PrecComplex, PrecComplex]:
    """Compute V_j = R1*eps_j + R2*zeta_{pairing[j]}."""
    eps = cube_roots_of_unity(ctx).eps
    return tuple(R1 * eps[j] + R2 * zetas.zetas[pairing[j]] for j in range(3))


# -- heptagon ----------------------------------------------------------------


def heptagon_trisection_target(ctx: PrecisionContext) -> PrecComplex:
    """The unit number (1 - 3*sqrt(3) i) / (2*sqrt(7)) whose argument is
    trisected by the heptagon Type I construction."""
    mp = ctx.mp
    return mp.mpc(1, -3 * mp.sqrt(mp.mpf(3))) / (2 * mp.sqrt(mp.mpf(7)))


def heptagon_type1(ctx: PrecisionContext) -> TriangleConstruction:
    """Heptagon from two radii and one trisection (three distinct sides).

    The vertices realize the quadratic-residue coset {1, 2, 4} of a
    unit-circumradius heptagon.
    """
    mp = ctx.mp
    tri = trisect_unit(heptagon_trisection_target(ctx), ctx)
    sqrt21 = mp.sqrt(mp.mpf(21))
    R1 = mp.sqrt((7 + sqrt21) / 18)
    R2 = mp.sqrt((7 - sqrt21) / 18)
    vertices = assemble_vertices(R1, R2, tri, CANONICAL_PAIRING, ctx)
    return TriangleConstruction(
        p=7,
        kind=ConstructionKind.TYPE_I,
        R1=R1,
        R2=R2,
        theta=tri.theta,
        zetas=tri,
        pairing=CANONICAL_PAIRING,
        vertices=vertices,
        coset_label=HEPTAGON_COSET,
    )


def _quadratic_pair(s, ctx: PrecisionContext, allow_complex: bool):
    """The two solutions of r + 1/r = s, as an (r, 1/r) pair."""
    mp = ctx.mp
    square = s * s - 4
    if square < 0:
        if not allow_complex:
            raise PrecisionError(
                f"expected |s| >= 2 on a real radius ladder, got s = {mp.nstr(s, 12)}"
            )
        root = mp.sqrt(mp.mpc(square))
    else:
        root = mp.sqrt(square)
    return (s + root) / 2, (s - root) / 2


def heptagon_type2_radii(ctx: PrecisionContext) -> RootLadder:
    """The six real radii r with r + 1/r a root of the descended cubic.

    s_k = -2 + sqrt(7) * (zeta_k + conj(zeta_k)) over the three branches
    of the heptagon trisection; each s_k splits into an inverse pair of
    radii at indices k and k+3.
    """
    mp = ctx.mp
    tri = trisect_unit(heptagon_trisection_target(ctx), ctx)
    sqrt7 = mp.sqrt(mp.mpf(7))
    s_values = tuple(-2 + sqrt7 * (2 * tri.zetas[k].real) for k in range(3))
    radii = [None] * 6
    for k, s in enumerate(s_values):
        radii[k], radii[k + 3] = _quadratic_pair(s, ctx, allow_complex=False)
    return RootLadder(
        p=7,
        s_values=s_values,
        radii=tuple(radii),
        family_of=(None,) * 6,
        convention="corrected",
    )


def heptagon_type2(k: int, ctx: PrecisionContext) -> TriangleConstruction:
    """Isosceles heptagon triangle with R1 = 1 and R2 the k-th ladder radius."""
    ladder = heptagon_type2_radii(ctx)
    return _ladder_construction(ladder, k, ctx)


# -- triskaidecagon ----------------------------------------------------------


def tridecagon_trisection_target(family: str, ctx: PrecisionContext) -> PrecComplex:
    """The unit number whose argument defines the 13-gon family angle.

    family "plus" keeps sqrt(26 + 5*sqrt(13)) on the real part, "minus"
    swaps the two nested radicals; both have a negative argument.
    """
    _check_family(family)
    mp = ctx.mp
    sqrt13 = mp.sqrt(mp.mpf(13))
    first = mp.sqrt(26 + 5 * sqrt13)
    second = mp.sqrt(26 - 5 * sqrt13)
    if family == "minus":
        first, second = second, first
    return mp.mpc(first, -second) / (2 * sqrt13)


def tridecagon_angle(family: str, ctx: PrecisionContext) -> PrecReal:
    """The defining angle of a 13-gon family, in radians (negative)."""
    target = tridecagon_trisection_target(family, ctx)
    return ctx.mp.atan2(target.imag, target.real)


def tridecagon_radii(family: str, ctx: PrecisionContext) -> tuple[PrecReal, PrecReal]:
    """Closed-form circle radii of the 13-gon Type I construction.

    Their product is exactly 1, so the constructed triangle is a scaled
    copy (scale 1/sqrt of the unit-polygon Cardano radius product) of a
    chord triangle of the regular 13-gon.
    """
    _check_family(family)
    mp = ctx.mp
    sqrt13 = mp.sqrt(mp.mpf(13))
    sign = 1 if family == "plus" else -1
    outer = mp.sqrt(13 + sign * sqrt13)
    inner = mp.sqrt(5 + sign * sqrt13)
    denom = 2 * mp.sqrt(mp.mpf(2))
    return mp.sqrt((outer + inner) / denom), mp.sqrt((outer - inner) / denom)


def tridecagon_type1(
    family: str, mirror: bool, ctx: PrecisionContext
) -> TriangleConstruction:
    """13-gon from two radii and one trisection (three distinct sides).

    The empirical orientation, confirmed by the polygon-fit search: with
    the principal-branch trisection the *conjugated* family target
    realizes the base cosets {1, 3, 9} / {2, 5, 6}, and the family target
    itself realizes their negatives {4, 10, 12} / {7, 8, 11}.  The
    unmirrored construction therefore trisects the conjugate.
    """
    _check_family(family)
    target = tridecagon_trisection_target(family, ctx)
    if not mirror:
        target = target.conjugate()
    tri = trisect_unit(target, ctx)
    R1, R2 = tridecagon_radii(family, ctx)
    vertices = assemble_vertices(R1, R2, tri, CANONICAL_PAIRING, ctx)
    return TriangleConstruction(
        p=13,
        kind=ConstructionKind.TYPE_I,
        R1=R1,
        R2=R2,
        theta=tri.theta,
        zetas=tri,
        pairing=CANONICAL_PAIRING,
        vertices=vertices,
        coset_label=TRIDECAGON_COSETS[(family, mirror)],
        family=family,
        mirror=mirror,
    )


def tridecagon_type2_radii(convention: str, ctx: PrecisionContext) -> RootLadder:
    """The twelve radii r with r + 1/r a root of the sextic's quadratic-field
    cubic factors.

    Under ``convention="corrected"`` the cosine term is scaled by
    sqrt((13 +- sqrt(13)) / 2) and the trisection target has its real part
    negated, which makes the six s-values exactly the roots of the two
    conjugate cubic factors (all radii real).  ``convention="printed"``
    follows the published radicals literally; the resulting s-values are
    not roots of the sextic (one of them falls inside (-2, 2), producing a
    complex radius pair), which the erratum report quantifies.
    """
    if convention not in CONVENTIONS:
        raise InvalidArgumentError(
            f"convention must be one of {CONVENTIONS}, got {convention!r}"
        )
    mp = ctx.mp
    sqrt13 = mp.sqrt(mp.mpf(13))
    corrected = convention == "corrected"
    s_values: list[PrecReal] = []
    radii: list = [None] * 12
    for block, family in enumerate(FAMILIES):
        sign = 1 if family == "plus" else -1
        offset = -(2 + sign * sqrt13)
        target = tridecagon_trisection_target(family, ctx)
        if corrected:
            scale = mp.sqrt((13 + sign * sqrt13) / 2)
            target = mp.mpc(-target.real, target.imag)
        else:
            scale = mp.sqrt(13 + sign * sqrt13)
        tri = trisect_unit(target, ctx)
        for k in range(3):
            s = offset + scale * (2 * tri.zetas[k].real)
            s_values.append(s)
            base = 6 * block + k
            radii[base], radii[base + 3] = _quadratic_pair(
                s, ctx, allow_complex=not corrected
            )
    family_of = ("+",) * 6 + ("-",) * 6
    return RootLadder(
        p=13,
        s_values=tuple(s_values),
        radii=tuple(radii),
        family_of=family_of,
        convention=convention,
    )


def tridecagon_type2(k: int, ctx: PrecisionContext) -> TriangleConstruction:
    """Isosceles 13-gon triangle with R1 = 1 and R2 the k-th corrected radius."""
    ladder = tridecagon_type2_radii("corrected", ctx)
    return _ladder_construction(ladder, k, ctx)


# -- shared Type II/III machinery --------------------------------------------


def _ladder_construction(
    ladder: RootLadder, k: int, ctx: PrecisionContext
) -> TriangleConstruction:
    if not 0 <= k < len(ladder.radii):
        raise InvalidArgumentError(
            f"ladder index must be in 0..{len(ladder.radii) - 1}, got {k}"
        )
    r = ladder.radii[k]
    tri = trisect_unit(ctx.complex(1), ctx)
    one = ctx.real(1)
    vertices = assemble_vertices(one, r, tri, CANONICAL_PAIRING, ctx)
    family = {"+": "plus", "-": "minus"}.get(ladder.family_of[k])
    return TriangleConstruction(
        p=ladder.p,
        kind=ConstructionKind.TYPE_II,
        R1=one,
        R2=r,
        theta=tri.theta,
        zetas=tri,
        pairing=CANONICAL_PAIRING,
        vertices=vertices,
        family=family,
        ladder_index=k,
    )


def type3_from(
    tc: TriangleConstruction, ctx: PrecisionContext | None = None
) -> TriangleConstruction:
    """Rewrite a Type II construction as Type III: trisect pi, negate R2.

    The principal cube roots of -1 are the negated eps_k shifted by one
    index, so composing the pairing with that shift reproduces the exact
    same three vertices.
    """
    if tc.kind is not ConstructionKind.TYPE_II:
        raise InvalidArgumentError(f"expected a Type II construction, got {tc.kind.value}")
    if ctx is None:
        ctx = context_of(tc.R1)
    tri = trisect_unit(ctx.complex(-1), ctx)
    pairing = tuple((j + 1) % 3 for j in tc.pairing)
    R2 = -tc.R2
    vertices = assemble_vertices(tc.R1, R2, tri, pairing, ctx)
    return dataclasses.replace(
        tc,
        kind=ConstructionKind.TYPE_III,
        R2=R2,
        theta=tri.theta,
        zetas=tri,
        pairing=pairing,
        vertices=vertices,
    )


def c3_shift(
    tc: TriangleConstruction, ctx: PrecisionContext | None = None
) -> TriangleConstruction:
    """Advance every trisection-branch index by one (an order-3 action).

    On Type I this reattaches the vertices to the shifted branches,
    giving a congruent, displaced triangle.  On Type II/III the branch
    shift permutes the underlying s-values, so it moves the radius to the
    next ladder index within its three-element block.
    """
    if ctx is None:
        ctx = context_of(tc.R1)
    if tc.kind is ConstructionKind.TYPE_I:
        pairing = tuple((j + 1) % 3 for j in tc.pairing)
        vertices = assemble_vertices(tc.R1, tc.R2, tc.zetas, pairing, ctx)
        return dataclasses.replace(tc, pairing=pairing, vertices=vertices)
    if tc.ladder_index is None:
        raise InvalidArgumentError("ladder construction is missing its ladder index")
    k = tc.ladder_index
    shifted = 3 * (k // 3) + (k + 1) % 3
    builder = heptagon_type2 if tc.p == 7 else tridecagon_type2
    out = builder(shifted, ctx)
    if tc.kind is ConstructionKind.TYPE_III:
        out = type3_from(out, ctx)
    return out


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise InvalidArgumentError(f"family must be one of {FAMILIES}, got {family!r}")
