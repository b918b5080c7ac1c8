"""Trisection-based constructions of the regular heptagon and
triskaidecagon, with independent verification oracles and an experimental
generalization to other primes p = 1 (mod 6)."""

from .constructions import (
    CANONICAL_PAIRING,
    ConstructionKind,
    HEPTAGON_RADIUS_CUBIC,
    HEPTAGON_RADIUS_SEXTIC,
    HEPTAGON_RADIUS_SEXTIC_PRINTED,
    RootLadder,
    TRIDECAGON_CUBIC_FACTOR,
    TRIDECAGON_CUBIC_FACTOR_PRINTED,
    TRIDECAGON_RADIUS_POLY,
    TRIDECAGON_RADIUS_SEXTIC,
    TriangleConstruction,
    assemble_vertices,
    c3_shift,
    heptagon_type1,
    heptagon_type2,
    heptagon_type2_radii,
    tridecagon_angle,
    tridecagon_radii,
    tridecagon_type1,
    tridecagon_type2,
    tridecagon_type2_radii,
    type3_from,
)
from .errors import (
    DomainError,
    InvalidArgumentError,
    PrecisionError,
    TrisectagonError,
)
from .numeric import (
    CubeRootsOfUnity,
    PrecComplex,
    PrecReal,
    PrecisionContext,
    TrisectionResult,
    cube_roots_of_unity,
    make_context,
    poly_roots_numeric,
    roots_of_unity,
    solve_cubic_trig,
    trisect_unit,
)
from .periods import (
    ConstructibilityProfile,
    CosetDecomposition,
    GeneralConstruction,
    cardano_from_coset,
    constructibility_profile,
    order3_cosets,
)
from .polynomials import (
    DescentPair,
    QuadPoly,
    RatPoly,
    RootThirteen,
    descend_palindromic,
    eval_poly,
    eval_scale,
    expand_conjugate_product,
    is_palindromic,
    lift_descent,
    poly_from_json,
    poly_to_json,
)
from .render import RenderOptions, render_svg
from .report import build_report, parse_report, report_json, validate_report
from .verification import (
    ErratumFinding,
    ErratumReport,
    PairingSearch,
    PolygonFit,
    TriangleReport,
    coset_check,
    exponent_gaps,
    fit_to_polygon,
    gap_multiset,
    isosceles_report,
    pairing_search,
    resolve_errata,
    similarity_classes,
)

__version__ = "0.1.0"
