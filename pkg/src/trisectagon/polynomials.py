"""Exact polynomial algebra over Q and over Q(sqrt(13)).

All coefficients are Fractions (or pairs of Fractions for the quadratic
field), so nothing here ever rounds.  The two structural operations this
package depends on are the palindromic descent r + 1/r <-> s and the
conjugate-product expansion over Q(sqrt(13)); both are used as exact
oracles that adjudicate published coefficient lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvalidArgumentError, PrecisionError
from .numeric import PrecComplex, PrecisionContext

FIELD_DISCRIMINANT = 13


def _fraction_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None."""
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


@dataclass(frozen=True)
class RootThirteen:
    """An element a + b*sqrt(13) of Q(sqrt(13)), with exact rational parts."""

    a: Fraction
    b: Fraction

    def __init__(self, a, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    # -- ring structure -----------------------------------------------------

    def __add__(self, other) -> RootThirteen:
        other = _coerce(other)
        return RootThirteen(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> RootThirteen:
        other = _coerce(other)
        return RootThirteen(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> RootThirteen:
        return _coerce(other) - self

    def __neg__(self) -> RootThirteen:
        return RootThirteen(-self.a, -self.b)

    def __mul__(self, other) -> RootThirteen:
        other = _coerce(other)
        return RootThirteen(
            self.a * other.a + FIELD_DISCRIMINANT * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> RootThirteen:
        return RootThirteen(self.a, -self.b)

    # -- predicates and order -----------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Exact sign of the real embedding a + b*sqrt(13)."""
        if self.a == 0 and self.b == 0:
            return 0
        if self.a >= 0 and self.b >= 0:
            return 1
        if self.a <= 0 and self.b <= 0:
            return -1
        # mixed signs: compare a**2 against 13 b**2
        if self.a > 0:
            return 1 if self.a * self.a > FIELD_DISCRIMINANT * self.b * self.b else -1
        return 1 if FIELD_DISCRIMINANT * self.b * self.b > self.a * self.a else -1

    def sqrt(self) -> RootThirteen | None:
        """The positive exact square root within Q(sqrt(13)), or None.

        Solves (x + y*sqrt(13))**2 = self over the rationals; used by the
        symmetric-function oracle, where the corrected radical scales turn
        out to be perfect squares in the field.
        """
        if self.sign() < 0:
            return None
        if self.b == 0:
            root = _fraction_sqrt(self.a)
            if root is not None:
                return RootThirteen(root, 0)
            root = _fraction_sqrt(self.a / FIELD_DISCRIMINANT)
            if root is not None:
                return RootThirteen(0, root)
            return None
        norm_root = _fraction_sqrt(self.a * self.a - FIELD_DISCRIMINANT * self.b * self.b)
        if norm_root is None:
            return None
        for y_sq in ((self.a + norm_root) / 26, (self.a - norm_root) / 26):
            y = _fraction_sqrt(y_sq)
            if y is None or y == 0:
                continue
            x = self.b / (2 * y)
            candidate = RootThirteen(x, y)
            if candidate * candidate == self:
                return candidate if candidate.sign() > 0 else -candidate
        return None

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt(13)"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt(13)"


def _coerce(value) -> RootThirteen:
    if isinstance(value, RootThirteen):
        return value
    if isinstance(value, (int, Fraction)):
        return RootThirteen(value, 0)
    raise TypeError(f"cannot coerce {value!r} into Q(sqrt(13))")


def _strip(coeffs: tuple) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


@dataclass(frozen=True)
class RatPoly:
    """A polynomial over Q, coefficients ascending by degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, *coeffs):
        if len(coeffs) == 1 and isinstance(coeffs[0], (tuple, list)):
            coeffs = tuple(coeffs[0])
        values = tuple(Fraction(c) for c in coeffs)
        object.__setattr__(self, "coeffs", _strip(values))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: RatPoly) -> RatPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    def __sub__(self, other: RatPoly) -> RatPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(
            tuple(self.coefficient(k) - other.coefficient(k) for k in range(n))
        )

    def __mul__(self, other: RatPoly) -> RatPoly:
        if self.is_zero or other.is_zero:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return RatPoly(tuple(out))

    def scaled(self, factor) -> RatPoly:
        factor = Fraction(factor)
        return RatPoly(tuple(c * factor for c in self.coeffs))

    def shifted(self, k: int) -> RatPoly:
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return RatPoly((Fraction(0),) * k + self.coeffs)

    def eval_exact(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return format_poly(self)


@dataclass(frozen=True)
class QuadPoly:
    """A polynomial over Q(sqrt(13)), coefficients ascending by degree."""

    coeffs: tuple[RootThirteen, ...]

    def __init__(self, *coeffs):
        if len(coeffs) == 1 and isinstance(coeffs[0], (tuple, list)):
            coeffs = tuple(coeffs[0])
        values = tuple(_coerce(c) for c in coeffs)
        object.__setattr__(self, "coeffs", _strip(values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> RootThirteen:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RootThirteen(0, 0)

    def conjugate(self) -> QuadPoly:
        return QuadPoly(tuple(c.conjugate() for c in self.coeffs))

    def __mul__(self, other: QuadPoly) -> QuadPoly:
        if not self.coeffs or not other.coeffs:
            return QuadPoly()
        out = [RootThirteen(0, 0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return QuadPoly(tuple(out))

    def __str__(self):
        return format_poly(self)


@dataclass(frozen=True)
class DescentPair:
    """A palindromic P of degree 2m together with its descended Q.

    Satisfies P(r) = Q(r + 1/r) * r**m as an exact identity.
    """

    P: RatPoly
    Q: RatPoly
    m: int


def is_palindromic(poly: RatPoly) -> bool:
    """True iff the coefficient list equals its reverse."""
    return poly.coeffs == tuple(reversed(poly.coeffs))


def lift_descent(Q: RatPoly, m: int) -> RatPoly:
    """Expand Q(r + 1/r) * r**m exactly.

    ``Q`` must have degree exactly ``m``; the result is palindromic of
    degree 2m.
    """
    if Q.degree != m:
        raise InvalidArgumentError(
            f"descended polynomial must have degree {m}, got degree {Q.degree}"
        )
    # Q(r + 1/r) * r^m = sum_j q_j (r^2 + 1)^j r^(m-j)
    total = RatPoly()
    binom = RatPoly(1)  # (r^2 + 1)^j, updated incrementally
    step = RatPoly(1, 0, 1)
    for j, q in enumerate(Q.coeffs):
        if q:
            total = total + binom.scaled(q).shifted(m - j)
        binom = binom * step
    return total


def descend_palindromic(P: RatPoly) -> DescentPair:
    """Invert :func:`lift_descent`: write a palindromic P as Q(r + 1/r) * r**m.

    Raises:
        DomainError: if P is not palindromic of even degree; for a
            palindrome mismatch the offending coefficient pair is named.
    """
    coeffs = P.coeffs
    for k in range(len(coeffs) // 2 + 1):
        if coeffs[k] != coeffs[len(coeffs) - 1 - k]:
            raise DomainError(
                "polynomial is not palindromic: coefficient of degree "
                f"{k} is {coeffs[k]} but degree {len(coeffs) - 1 - k} is "
                f"{coeffs[len(coeffs) - 1 - k]}"
            )
    if P.degree % 2 != 0 or P.is_zero:
        raise DomainError(
            f"palindromic descent needs even degree, got degree {P.degree}"
        )
    m = P.degree // 2
    work = P
    q_coeffs = [Fraction(0)] * (m + 1)
    for k in range(m, -1, -1):
        c = work.coefficient(m + k)
        q_coeffs[k] = c
        if c:
            work = work - lift_descent(RatPoly((Fraction(0),) * k + (c,)), k).shifted(m - k)
    if not work.is_zero:
        raise PrecisionError("palindromic descent left a nonzero remainder")
    Q = RatPoly(tuple(q_coeffs))
    return DescentPair(P=P, Q=Q, m=m)


def expand_conjugate_product(R: QuadPoly) -> RatPoly:
    """Expand R * conj(R) exactly; the result lies in Q[x].

    The sqrt(13) component of every product coefficient cancels
    identically; a nonzero component would mean corrupted arithmetic,
    so it is asserted rather than reported.
    """
    product = R * R.conjugate()
    for k, c in enumerate(product.coeffs):
        if c.b != 0:
            raise PrecisionError(
                f"conjugate product kept a sqrt(13) part at degree {k}: {c}"
            )
    return RatPoly(tuple(c.a for c in product.coeffs))


def eval_poly(poly: RatPoly | QuadPoly, x, ctx: PrecisionContext) -> PrecComplex:
    """Horner evaluation at context precision.

    For :class:`QuadPoly` the coefficients are embedded numerically via
    the positive square root of 13.
    """
    mp = ctx.mp
    x = mp.mpc(x)
    if isinstance(poly, QuadPoly):
        sqrt13 = mp.sqrt(mp.mpf(FIELD_DISCRIMINANT))
        numeric = [ctx.real(c.a) + ctx.real(c.b) * sqrt13 for c in poly.coeffs]
    else:
        numeric = [ctx.real(c) for c in poly.coeffs]
    acc = mp.mpc(0)
    for c in reversed(numeric):
        acc = acc * x + c
    return acc


def eval_scale(poly: RatPoly | QuadPoly, x, ctx: PrecisionContext) -> PrecReal:
    """Magnitude scale sum_k |c_k| |x|**k of an evaluation.

    Residual checks of the form ``|poly(x)| < tolerance * scale`` use this
    as the backward-stable notion of "scale".
    """
    mp = ctx.mp
    mag = abs(mp.mpc(x))
    if isinstance(poly, QuadPoly):
        sqrt13 = mp.sqrt(mp.mpf(FIELD_DISCRIMINANT))
        sizes = [abs(ctx.real(c.a)) + abs(ctx.real(c.b)) * sqrt13 for c in poly.coeffs]
    else:
        sizes = [abs(ctx.real(c)) for c in poly.coeffs]
    acc = mp.mpf(0)
    for c in reversed(sizes):
        acc = acc * mag + c
    return max(mp.mpf(1), acc)


# -- JSON form -------------------------------------------------------------
#
# A polynomial serializes to an array of coefficient strings, ascending by
# degree: "num/den" over Q, or a ["num/den", "num/den"] pair meaning
# a + b*sqrt(13) over the quadratic field.


def poly_to_json(poly: RatPoly | QuadPoly) -> list:
    if isinstance(poly, QuadPoly):
        return [[str(c.a), str(c.b)] for c in poly.coeffs]
    return [str(c) for c in poly.coeffs]


def poly_from_json(data: list) -> RatPoly | QuadPoly:
    if not isinstance(data, list):
        raise InvalidArgumentError("polynomial JSON must be an array")
    if data and isinstance(data[0], list):
        coeffs = []
        for entry in data:
            if not isinstance(entry, list) or len(entry) != 2:
                raise InvalidArgumentError(
                    f"quadratic-field coefficient must be a [a, b] pair, got {entry!r}"
                )
            coeffs.append(RootThirteen(Fraction(entry[0]), Fraction(entry[1])))
        return QuadPoly(tuple(coeffs))
    return RatPoly(tuple(Fraction(entry) for entry in data))


def format_poly(poly: RatPoly | QuadPoly, var: str = "r") -> str:
    """Human-readable rendering, highest degree first."""
    if not poly.coeffs:
        return "0"
    parts = []
    for k in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[k]
        if isinstance(c, RootThirteen):
            if c.a == 0 and c.b == 0:
                continue
            text = f"({c})"
            sign = ""
        else:
            if c == 0:
                continue
            sign = "-" if c < 0 else ""
            mag = abs(c)
            text = "" if (mag == 1 and k > 0) else str(mag)
        if k == 0:
            power = ""
        elif k == 1:
            power = var
        else:
            power = f"{var}^{k}"
        body = text + (" " if text and power else "") + power if power else text or "1"
        parts.append((sign, body))
    out = ""
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out = f"-{body}" if sign else body
        else:
            out += f" - {body}" if sign else f" + {body}"
    return out
