"""Arbitrary-precision real/complex arithmetic and the trisection kernel.

Every numeric operation in the package flows through a
:class:`PrecisionContext`, which owns an independent mpmath context fixed
at a given number of significant decimal digits.  Contexts are never
mutated after creation, so values and operations are safe for concurrent
use.  The verification tolerance derived from a context deliberately
leaves ten guard digits against accumulated rounding error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath.ctx_mp import MPContext
from mpmath.ctx_mp_python import _mpc as PrecComplex
from mpmath.ctx_mp_python import _mpf as PrecReal

from .errors import DomainError, InvalidArgumentError

DEFAULT_DIGITS = 50
MIN_DIGITS = 16
# tolerance = 10 ** (GUARD_DIGITS - digits)
GUARD_DIGITS = 10


class PrecisionContext:
    """A fixed-precision arithmetic context.

    Attributes:
        digits: significant decimal digits carried by all arithmetic.
        mp: the underlying mpmath context (do not change its precision).
        tolerance: 10**(10 - digits); every "within tolerance" check in
            the package uses this value.
    """

    __slots__ = ("digits", "mp", "tolerance")

    def __init__(self, digits: int = DEFAULT_DIGITS):
        if digits < MIN_DIGITS:
            raise InvalidArgumentError(
                f"precision must be at least {MIN_DIGITS} digits, got {digits}"
            )
        mp = MPContext()
        mp.dps = digits
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "mp", mp)
        object.__setattr__(self, "tolerance", mp.mpf(10) ** (GUARD_DIGITS - digits))

    def __setattr__(self, name, value):
        raise AttributeError("PrecisionContext is immutable")

    def __repr__(self):
        return f"PrecisionContext(digits={self.digits})"

    # -- conversion helpers -------------------------------------------------

    def real(self, value) -> PrecReal:
        """Convert an int, str, float or Fraction to a context real."""
        if isinstance(value, Fraction):
            return self.mp.mpf(value.numerator) / value.denominator
        return self.mp.mpf(value)

    def complex(self, re, im=0) -> PrecComplex:
        return self.mp.mpc(self.real(re), self.real(im))


def make_context(digits: int = DEFAULT_DIGITS) -> PrecisionContext:
    """Create a precision context with the given significant digits (>= 16)."""
    return PrecisionContext(digits)


def context_of(value) -> PrecisionContext:
    """Recover a context matching the precision a value was computed at.

    Used by operations that transform existing results and were not handed
    an explicit context.
    """
    return PrecisionContext(type(value).context.dps)


@dataclass(frozen=True)
class CubeRootsOfUnity:
    """The three cube roots of unity eps_k = exp(2*pi*i*k/3), k = 0, 1, 2."""

    eps: tuple[PrecComplex, PrecComplex, PrecComplex]

    def __getitem__(self, k: int) -> PrecComplex:
        return self.eps[k]


@dataclass(frozen=True)
class TrisectionResult:
    """Cube roots of a unit-modulus complex number.

    ``zetas[0]`` is the principal root (argument in (-pi/3, pi/3]) and
    ``zetas[k] = eps_k * zetas[0]``, so extracting them trisects the
    angle ``theta = arg(input)``.
    """

    input: PrecComplex
    theta: PrecReal
    zetas: tuple[PrecComplex, PrecComplex, PrecComplex]


def cube_roots_of_unity(ctx: PrecisionContext) -> CubeRootsOfUnity:
    """Return eps_0 = 1, eps_1 = (-1 + sqrt(3) i)/2 and eps_2 = eps_1**2."""
    mp = ctx.mp
    half_sqrt3 = mp.sqrt(mp.mpf(3)) / 2
    minus_half = mp.mpf(-1) / 2
    eps1 = mp.mpc(minus_half, half_sqrt3)
    eps2 = mp.mpc(minus_half, -half_sqrt3)
    return CubeRootsOfUnity((mp.mpc(1), eps1, eps2))


def trisect_unit(z, ctx: PrecisionContext) -> TrisectionResult:
    """Trisect the argument of a unit-modulus complex number.

    Returns theta = atan2(Im z, Re z) in (-pi, pi] and the three cube
    roots of ``z``; each root has exactly unit modulus by construction.

    Raises:
        InvalidArgumentError: if ``| |z| - 1 |`` exceeds the context
            tolerance (the reported deviation is included).
    """
    mp = ctx.mp
    z = mp.mpc(z)
    deviation = abs(abs(z) - 1)
    if deviation >= ctx.tolerance:
        raise InvalidArgumentError(
            f"trisection input must have unit modulus; | |z| - 1 | = {mp.nstr(deviation, 8)}"
        )
    theta = mp.atan2(z.imag, z.real)
    third = theta / 3
    principal = mp.mpc(mp.cos(third), mp.sin(third))
    eps = cube_roots_of_unity(ctx).eps
    return TrisectionResult(z, theta, tuple(eps[k] * principal for k in range(3)))


def solve_cubic_trig(a, b, c, ctx: PrecisionContext) -> tuple[PrecReal, PrecReal, PrecReal]:
    """Solve s**3 + a*s**2 + b*s + c = 0 by the trigonometric method.

    The three real roots are returned in ascending order.  The method is
    the numeric mirror of a trisection: the depressed cubic is solved as
    scaled cosines of a third of an angle.

    Raises:
        DomainError: if the cubic does not have three real roots; the
            message reports the (negative) discriminant.
    """
    mp = ctx.mp
    a, b, c = ctx.real(a), ctx.real(b), ctx.real(c)
    p = b - a * a / 3
    q = 2 * a**3 / 27 - a * b / 3 + c
    disc = -4 * p**3 - 27 * q * q
    shift = -a / 3
    if p >= 0:
        if p == 0 and q == 0:
            return (shift, shift, shift)
        raise DomainError(
            f"cubic has complex roots (discriminant {mp.nstr(disc, 8)})"
        )
    if disc < -ctx.tolerance:
        raise DomainError(
            f"cubic has complex roots (discriminant {mp.nstr(disc, 8)})"
        )
    amplitude = 2 * mp.sqrt(-p / 3)
    # cos(3*psi) = 3q / (A*p); rounding may push the ratio slightly past +-1
    ratio = 3 * q / (amplitude * p)
    ratio = max(mp.mpf(-1), min(mp.mpf(1), ratio))
    psi = mp.acos(ratio) / 3
    two_thirds_pi = 2 * mp.pi / 3
    roots = [amplitude * mp.cos(psi - two_thirds_pi * k) + shift for k in range(3)]
    roots.sort()
    return tuple(roots)


def roots_of_unity(p: int, ctx: PrecisionContext) -> tuple[PrecComplex, ...]:
    """Return exp(2*pi*i*k/p) for k = 0 .. p-1."""
    if p < 1:
        raise InvalidArgumentError(f"order must be positive, got {p}")
    mp = ctx.mp
    step = 2 * mp.pi / p
    return tuple(mp.mpc(mp.cos(step * k), mp.sin(step * k)) for k in range(p))


def poly_roots_numeric(poly, ctx: PrecisionContext) -> tuple[PrecComplex, ...]:
    """All complex roots of an exact-coefficient polynomial.

    This is the independent root-finding oracle: it delegates to mpmath's
    simultaneous-iteration solver rather than any closed form used
    elsewhere in the package.  Roots are ordered by real part, then
    imaginary part.

    Raises:
        InvalidArgumentError: for the zero polynomial or degree < 1.
    """
    coeffs = poly.coeffs
    if not coeffs:
        raise InvalidArgumentError("cannot extract roots of the zero polynomial")
    if len(coeffs) < 2:
        raise InvalidArgumentError("polynomial must have degree >= 1")
    mp = ctx.mp
    descending = [ctx.real(c) for c in reversed(coeffs)]
    roots = mp.polyroots(descending, maxsteps=500, extraprec=ctx.digits)
    roots = [mp.mpc(r) for r in roots]
    roots.sort(key=lambda r: (r.real, r.imag))
    return tuple(roots)
