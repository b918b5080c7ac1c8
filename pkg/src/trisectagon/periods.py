"""Experimental generalization to arbitrary primes p = 1 (mod 6).

For each multiplicative coset of the order-3 subgroup mod p, the three
p-th roots of unity it indexes are the roots of a cubic with small
coefficients (a Gaussian-period cubic for the subgroup itself).  Solving
that cubic by Cardano's method yields exactly the two-radii-plus-one-
trisection data of the heptagon picture: a translation c, a pair of
conjugate-ish vectors u, v with |u|, |v| the circle radii, and the angle
arg(u**3) to trisect.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidArgumentError, PrecisionError
from .numeric import (
    PrecComplex,
    PrecReal,
    PrecisionContext,
    cube_roots_of_unity,
    roots_of_unity,
)


@dataclass(frozen=True)
class CosetDecomposition:
    """The order-3 subgroup of (Z/pZ)* and its multiplicative cosets."""

    p: int
    subgroup: tuple[int, int, int]
    cosets: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class GeneralConstruction:
    """Cardano data reconstructing the roots of unity indexed by a coset.

    vertices[j] = center + eps_j * u + eps_j**2 * v; R1 = |u|, R2 = |v|,
    theta = arg(u**3).  The residual is the reconstruction error against
    the true roots of unity.
    """

    p: int
    coset: tuple[int, int, int]
    center: PrecComplex
    R1: PrecReal
    R2: PrecReal
    theta: PrecReal
    vertices: tuple[PrecComplex, PrecComplex, PrecComplex]
    residual: PrecReal


@dataclass(frozen=True)
class ConstructibilityProfile:
    """Factorization heuristic for reaching the coset cubic by square roots
    and trisections alone.  Indicative only, not a constructibility proof."""

    p: int
    coset_count: int
    two_exponent: int
    three_exponent: int
    residual_factor: int

    @property
    def tower_feasible(self) -> bool:
        return self.residual_factor == 1


def _require_valid_prime(p: int) -> None:
    if p < 7 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise InvalidArgumentError(f"{p} is not a prime >= 7")
    if p % 6 != 1:
        raise InvalidArgumentError(f"{p} is not congruent to 1 mod 6")


def order3_cosets(p: int) -> CosetDecomposition:
    """Find the unique order-3 subgroup mod p and enumerate its cosets.

    Cosets are listed in ascending order of their smallest element, so
    the subgroup itself always comes first.
    """
    _require_valid_prime(p)
    generator = next(h for h in range(2, p) if pow(h, 3, p) == 1)
    subgroup = tuple(sorted((1, generator, pow(generator, 2, p))))
    cosets = []
    seen: set[int] = set()
    for g in range(1, p):
        if g in seen:
            continue
        coset = tuple(sorted((g * h) % p for h in subgroup))
        seen.update(coset)
        cosets.append(coset)
    return CosetDecomposition(p=p, subgroup=subgroup, cosets=tuple(cosets))


def cardano_from_coset(p: int, coset, ctx: PrecisionContext) -> GeneralConstruction:
    """Cardano construction data for one coset's three roots of unity.

    The elementary symmetric functions of the three roots are computed
    numerically, the cubic is depressed (center = e1 / 3), and the cube
    roots are paired so that u * v equals minus a third of the depressed
    linear coefficient.  Reconstruction is checked against the true roots
    of unity; failure indicates a branch-pairing bug and raises.
    """
    coset = tuple(sorted(x % p for x in coset))
    decomposition = order3_cosets(p)
    if coset not in decomposition.cosets:
        raise InvalidArgumentError(f"{coset} is not a coset of the order-3 subgroup mod {p}")
    mp = ctx.mp
    omega = roots_of_unity(p, ctx)
    targets = [omega[a] for a in coset]
    e1 = targets[0] + targets[1] + targets[2]
    e2 = targets[0] * targets[1] + targets[0] * targets[2] + targets[1] * targets[2]
    e3 = targets[0] * targets[1] * targets[2]
    center = e1 / 3
    # depressed cubic y^3 + p_dep*y + q_dep with y = x - center
    a1, a0 = e2, -e3
    p_dep = a1 - e1 * e1 / 3
    q_dep = -2 * e1**3 / 27 + e1 * a1 / 3 + a0
    disc_root = mp.sqrt(q_dep * q_dep + 4 * p_dep**3 / 27)
    u_cubed = (-q_dep + disc_root) / 2
    theta = mp.atan2(u_cubed.imag, u_cubed.real)
    magnitude = abs(u_cubed) ** (mp.mpf(1) / 3)
    u = magnitude * mp.mpc(mp.cos(theta / 3), mp.sin(theta / 3))
    if u == 0:
        raise PrecisionError(f"degenerate Cardano pair for coset {coset} mod {p}")
    v = -p_dep / (3 * u)
    eps = cube_roots_of_unity(ctx).eps
    vertices = tuple(center + eps[j] * u + eps[j] ** 2 * v for j in range(3))
    residual = min(
        max(abs(vertices[j] - targets[perm[j]]) for j in range(3))
        for perm in itertools.permutations(range(3))
    )
    if residual >= ctx.tolerance:
        raise PrecisionError(
            f"coset {coset} mod {p}: reconstruction residual "
            f"{mp.nstr(residual, 8)} exceeds tolerance (branch pairing bug?)"
        )
    return GeneralConstruction(
        p=p,
        coset=coset,
        center=center,
        R1=abs(u),
        R2=abs(v),
        theta=theta,
        vertices=vertices,
        residual=residual,
    )


def constructibility_profile(p: int) -> ConstructibilityProfile:
    """Factor (p - 1) / 3 as 2^a * 3^b * m; m = 1 flags tower feasibility."""
    _require_valid_prime(p)
    count = (p - 1) // 3
    m = count
    two = three = 0
    while m % 2 == 0:
        m //= 2
        two += 1
    while m % 3 == 0:
        m //= 3
        three += 1
    return ConstructibilityProfile(
        p=p,
        coset_count=count,
        two_exponent=two,
        three_exponent=three,
        residual_factor=m,
    )
