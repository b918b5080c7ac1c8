"""Canonical JSON reports.

All numeric values are rendered as strings with 30 significant digits so
the document survives any JSON parser unchanged; angles appear in
degrees.  Member order is fixed by the builders, the byte form is UTF-8
with a trailing newline, and a document always carries every block (an
empty run produces empty arrays, not missing keys).
"""

from __future__ import annotations

import json

from .constructions import RootLadder, TriangleConstruction
from .errors import InvalidArgumentError
from .numeric import PrecComplex
from .periods import ConstructibilityProfile, GeneralConstruction
from .verification import ErratumReport, PolygonFit, TriangleReport, gap_multiset

SCHEMA_VERSION = "1"
SIGNIFICANT_DIGITS = 30

_BLOCKS = (
    "constructions",
    "fits",
    "triangles",
    "cosets",
    "ladders",
    "general",
    "profiles",
    "errata",
)


def fmt_number(value) -> str:
    """A real value as a 30-significant-digit decimal string."""
    mp = type(value).context
    return mp.nstr(value, SIGNIFICANT_DIGITS, strip_zeros=False)


def fmt_complex(value: PrecComplex) -> dict:
    return {"re": fmt_number(value.real), "im": fmt_number(value.imag)}


def fmt_degrees(radians) -> str:
    mp = type(radians).context
    return fmt_number(radians * 180 / mp.pi)


def _fmt_maybe_complex(value):
    if isinstance(value, PrecComplex):
        return fmt_complex(value)
    return fmt_number(value)


def construction_block(tc: TriangleConstruction) -> dict:
    return {
        "p": tc.p,
        "kind": tc.kind.value,
        "family": tc.family,
        "mirror": tc.mirror,
        "ladder_index": tc.ladder_index,
        "R1": fmt_number(tc.R1),
        "R2": fmt_number(tc.R2),
        "theta_degrees": fmt_degrees(tc.theta),
        "pairing": list(tc.pairing),
        "coset_label": sorted(tc.coset_label) if tc.coset_label else None,
        "vertices": [fmt_complex(v) for v in tc.vertices],
    }


def fit_block(fit: PolygonFit) -> dict:
    return {
        "p": fit.p,
        "exponents": list(fit.exponents),
        "gap_multiset": list(gap_multiset(fit)),
        "center": fmt_complex(fit.center),
        "rotation_degrees": fmt_degrees(fit.rotation),
        "scale": fmt_number(fit.scale),
        "residual": fmt_number(fit.residual),
    }


def triangle_block(report: TriangleReport) -> dict:
    return {
        "side_lengths": [fmt_number(s) for s in report.side_lengths],
        "apex_index": report.apex_index,
        "axis_angle_degrees": None
        if report.axis_angle is None
        else fmt_degrees(report.axis_angle),
        "axis_through_origin_residual": None
        if report.axis_through_origin_residual is None
        else fmt_number(report.axis_through_origin_residual),
    }


def coset_block(claimed, matched: bool) -> dict:
    return {"claimed": sorted(claimed), "matched": bool(matched)}


def ladder_block(ladder: RootLadder) -> dict:
    return {
        "p": ladder.p,
        "convention": ladder.convention,
        "s_values": [fmt_number(s) for s in ladder.s_values],
        "radii": [_fmt_maybe_complex(r) for r in ladder.radii],
        "family_of": list(ladder.family_of),
    }


def general_block(gc: GeneralConstruction) -> dict:
    return {
        "p": gc.p,
        "coset": list(gc.coset),
        "center": fmt_complex(gc.center),
        "R1": fmt_number(gc.R1),
        "R2": fmt_number(gc.R2),
        "theta_degrees": fmt_degrees(gc.theta),
        "vertices": [fmt_complex(v) for v in gc.vertices],
        "residual": fmt_number(gc.residual),
    }


def profile_block(profile: ConstructibilityProfile) -> dict:
    return {
        "p": profile.p,
        "coset_count": profile.coset_count,
        "two_exponent": profile.two_exponent,
        "three_exponent": profile.three_exponent,
        "residual_factor": profile.residual_factor,
        "tower_feasible": profile.tower_feasible,
        "heuristic": True,
    }


def errata_blocks(report: ErratumReport) -> list[dict]:
    return [
        {
            "id": f.id,
            "printed_form": f.printed_form,
            "derived_form": f.derived_form,
            "oracle": f.oracle,
            "verdict": f.verdict,
        }
        for f in report.findings
    ]


def build_report(
    digits: int,
    constructions=(),
    fits=(),
    triangles=(),
    cosets=(),
    ladders=(),
    general=(),
    profiles=(),
    errata=None,
) -> dict:
    """Assemble a schema-complete report document.

    Every argument is optional; the resulting dict always contains every
    block, empty where nothing was supplied.
    """
    return {
        "schema_version": SCHEMA_VERSION,
        "digits": digits,
        "constructions": [construction_block(tc) for tc in constructions],
        "fits": [fit_block(f) for f in fits],
        "triangles": [triangle_block(t) for t in triangles],
        "cosets": [coset_block(claimed, matched) for claimed, matched in cosets],
        "ladders": [ladder_block(ladder) for ladder in ladders],
        "general": [general_block(gc) for gc in general],
        "profiles": [profile_block(p) for p in profiles],
        "errata": errata_blocks(errata) if errata is not None else [],
    }


def report_json(document: dict) -> bytes:
    """Serialize a report document: UTF-8, two-space indent, one trailing
    newline; member order is the builder's canonical order."""
    return (json.dumps(document, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def parse_report(data: bytes) -> dict:
    document = json.loads(data.decode("utf-8"))
    validate_report(document)
    return document


def validate_report(document: dict) -> None:
    """Check the document against the declared schema shape."""
    if not isinstance(document, dict):
        raise InvalidArgumentError("report document must be an object")
    if document.get("schema_version") != SCHEMA_VERSION:
        raise InvalidArgumentError(
            f"unsupported schema version {document.get('schema_version')!r}"
        )
    if not isinstance(document.get("digits"), int):
        raise InvalidArgumentError("report must carry integer precision digits")
    for block in _BLOCKS:
        if not isinstance(document.get(block), list):
            raise InvalidArgumentError(f"report block {block!r} must be an array")
