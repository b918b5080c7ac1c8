"""Command-line interface.

Exit codes: 0 success (or verified), 2 verification failed, 3 invalid
arguments, 4 internal precision failure.  The default working precision
is 50 digits; the TRISECTAGON_DIGITS environment variable overrides it
and the --digits flag overrides both.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import constructions as cons
from . import periods, report
from .errors import DomainError, InvalidArgumentError, PrecisionError
from .numeric import PrecComplex, make_context
from .render import RenderOptions, render_svg
from .verification import (
    coset_check,
    fit_to_polygon,
    gap_multiset,
    isosceles_report,
    resolve_errata,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 2
EXIT_INVALID_ARGUMENTS = 3
EXIT_PRECISION_FAILURE = 4

DIGITS_ENV_VAR = "TRISECTAGON_DIGITS"


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems through our error type."""

    def error(self, message):
        raise InvalidArgumentError(message)


def _add_selectors(parser: _Parser) -> None:
    parser.add_argument("--p", type=int, choices=(7, 13), default=7,
                        help="polygon order (default 7)")
    parser.add_argument("--construction", type=int, choices=(1, 2, 3), default=1,
                        help="construction type (default 1)")
    parser.add_argument("--root-index", type=int, default=None,
                        help="ladder index for construction 2/3 (default 0)")
    parser.add_argument("--family", choices=cons.FAMILIES, default=None,
                        help="13-gon family for construction 1 (default plus)")
    parser.add_argument("--mirror", action="store_true",
                        help="use the mirrored trisection (13-gon construction 1)")


def _add_common(parser: _Parser) -> None:
    parser.add_argument("--digits", type=int, default=None,
                        help="working precision in significant digits (default 50)")
    parser.add_argument("--json", type=Path, default=None, metavar="PATH",
                        help="write the full JSON report to PATH")


def build_parser() -> _Parser:
    parser = _Parser(prog="trisectagon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="build a construction and print it")
    _add_selectors(p_construct)
    _add_common(p_construct)
    p_construct.add_argument("--svg", type=Path, default=None, metavar="PATH",
                             help="additionally render the construction to PATH")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="verify a construction's vertices")
    _add_selectors(p_verify)
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_roots = sub.add_parser("roots", help="print a Type II radius ladder")
    p_roots.add_argument("--p", type=int, choices=(7, 13), default=7)
    p_roots.add_argument("--convention", choices=cons.CONVENTIONS, default="corrected",
                         help="13-gon radical convention (default corrected)")
    _add_common(p_roots)
    p_roots.set_defaults(func=cmd_roots)

    p_errata = sub.add_parser("errata", help="adjudicate the published coefficient claims")
    _add_common(p_errata)
    p_errata.set_defaults(func=cmd_errata)

    p_general = sub.add_parser("generalize", help="Cardano construction for any prime p = 1 mod 6")
    p_general.add_argument("--p", type=int, required=True)
    p_general.add_argument("--coset", type=int, default=None, metavar="INDEX",
                           help="coset index (default: all cosets)")
    _add_common(p_general)
    p_general.set_defaults(func=cmd_generalize)

    p_render = sub.add_parser("render", help="render a construction to SVG")
    _add_selectors(p_render)
    p_render.add_argument("--digits", type=int, default=None)
    p_render.add_argument("--canvas", type=int, default=1000,
                          help="canvas size in pixels (default 1000)")
    p_render.add_argument("--out", type=Path, required=True, metavar="PATH")
    p_render.set_defaults(func=cmd_render)
    return parser


def _resolve_digits(args) -> int:
    if args.digits is not None:
        return args.digits
    env = os.environ.get(DIGITS_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InvalidArgumentError(
                f"{DIGITS_ENV_VAR} must be an integer, got {env!r}"
            ) from None
    return 50


def _selected_construction(args, ctx) -> cons.TriangleConstruction:
    if args.construction == 1:
        if args.root_index is not None:
            raise InvalidArgumentError("--root-index applies to constructions 2 and 3 only")
        if args.p == 7:
            if args.family is not None or args.mirror:
                raise InvalidArgumentError("--family/--mirror apply to the 13-gon only")
            return cons.heptagon_type1(ctx)
        return cons.tridecagon_type1(args.family or "plus", args.mirror, ctx)
    if args.family is not None or args.mirror:
        raise InvalidArgumentError("--family/--mirror apply to construction 1 only")
    index = args.root_index if args.root_index is not None else 0
    builder = cons.heptagon_type2 if args.p == 7 else cons.tridecagon_type2
    tc = builder(index, ctx)
    if args.construction == 3:
        tc = cons.type3_from(tc, ctx)
    return tc


def _fmt(value, digits: int = 15) -> str:
    return type(value).context.nstr(value, digits)


def _fmt_complex(z, digits: int = 15) -> str:
    mp = type(z).context
    return f"{mp.nstr(z.real, digits)} {'+' if z.imag >= 0 else '-'} {mp.nstr(abs(z.imag), digits)}i"


def _degrees(radians) -> str:
    mp = type(radians).context
    return mp.nstr(radians * 180 / mp.pi, 15)


def _verification_blocks(tc, ctx):
    """Fit, triangle report, and coset/extra checks shared by commands."""
    fit = fit_to_polygon(tc.vertices, tc.p, ctx)
    triangle = isosceles_report(tc.vertices, ctx)
    checks = [("fit residual below tolerance", fit.residual < ctx.tolerance)]
    cosets = []
    if tc.coset_label is not None:
        matched = coset_check(fit, tc.coset_label, tc.p)
        cosets.append((tc.coset_label, matched))
        checks.append((f"coset {sorted(tc.coset_label)}", matched))
    if tc.kind is cons.ConstructionKind.TYPE_I:
        if tc.p == 13:
            checks.append(
                ("radius product R1*R2 = 1", abs(tc.R1 * tc.R2 - 1) < ctx.tolerance)
            )
    else:
        checks.append(("isosceles apex present", triangle.apex_index is not None))
        checks.append(
            (
                "symmetry axis through origin",
                triangle.axis_through_origin_residual is not None
                and triangle.axis_through_origin_residual < ctx.tolerance,
            )
        )
    return fit, triangle, cosets, checks


def _write_json(path: Path | None, document: dict) -> None:
    if path is not None:
        path.write_bytes(report.report_json(document))


def _print_construction(tc, fit) -> None:
    print(f"p = {tc.p}, construction type {tc.kind.value}")
    if tc.family is not None:
        mirror = " (mirrored)" if tc.mirror else ""
        print(f"family: {tc.family}{mirror}")
    if tc.ladder_index is not None:
        print(f"ladder index: {tc.ladder_index}")
    print(f"R1 = {_fmt(tc.R1)}")
    print(f"R2 = {_fmt(tc.R2)}")
    print(f"trisected angle = {_degrees(tc.theta)} degrees")
    for j, v in enumerate(tc.vertices):
        print(f"V{j} = {_fmt_complex(v)}")
    if tc.coset_label is not None:
        print(f"coset label: {sorted(tc.coset_label)}")
    print(
        f"polygon fit: exponents {list(fit.exponents)}, gaps {list(gap_multiset(fit))}, "
        f"scale {_fmt(fit.scale)}, residual {_fmt(fit.residual, 5)}"
    )


def cmd_construct(args) -> int:
    ctx = make_context(_resolve_digits(args))
    tc = _selected_construction(args, ctx)
    fit, triangle, cosets, _ = _verification_blocks(tc, ctx)
    _print_construction(tc, fit)
    _write_json(
        args.json,
        report.build_report(
            ctx.digits,
            constructions=[tc],
            fits=[fit],
            triangles=[triangle],
            cosets=cosets,
        ),
    )
    if args.svg is not None:
        args.svg.write_bytes(render_svg(tc, RenderOptions(), ctx))
    return EXIT_OK


def cmd_verify(args) -> int:
    ctx = make_context(_resolve_digits(args))
    tc = _selected_construction(args, ctx)
    fit, triangle, cosets, checks = _verification_blocks(tc, ctx)
    all_ok = True
    for name, ok in checks:
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
        all_ok = all_ok and ok
    print(f"fit residual = {_fmt(fit.residual, 5)} (tolerance {_fmt(ctx.tolerance, 3)})")
    _write_json(
        args.json,
        report.build_report(
            ctx.digits,
            constructions=[tc],
            fits=[fit],
            triangles=[triangle],
            cosets=cosets,
        ),
    )
    return EXIT_OK if all_ok else EXIT_VERIFICATION_FAILED


def cmd_roots(args) -> int:
    ctx = make_context(_resolve_digits(args))
    if args.p == 7:
        if args.convention != "corrected":
            raise InvalidArgumentError("the heptagon ladder has no printed/corrected split")
        ladder = cons.heptagon_type2_radii(ctx)
    else:
        ladder = cons.tridecagon_type2_radii(args.convention, ctx)
    print(f"p = {ladder.p} ladder, convention: {ladder.convention}")
    for k, s in enumerate(ladder.s_values):
        print(f"s_{k} = {_fmt(s, 25)}")
    for k, r in enumerate(ladder.radii):
        family = ladder.family_of[k]
        tag = f" family {family}" if family else ""
        value = _fmt_complex(r, 25) if isinstance(r, PrecComplex) else _fmt(r, 25)
        print(f"r_{k} = {value}{tag}")
    _write_json(args.json, report.build_report(ctx.digits, ladders=[ladder]))
    return EXIT_OK


def cmd_errata(args) -> int:
    ctx = make_context(_resolve_digits(args))
    findings = resolve_errata(ctx)
    for finding in findings.findings:
        print(f"{finding.id}: {finding.verdict}")
        print(f"  printed: {finding.printed_form}")
        print(f"  derived: {finding.derived_form}")
        print(f"  oracle:  {finding.oracle}")
    _write_json(args.json, report.build_report(ctx.digits, errata=findings))
    return EXIT_OK


def cmd_generalize(args) -> int:
    ctx = make_context(_resolve_digits(args))
    decomposition = periods.order3_cosets(args.p)
    profile = periods.constructibility_profile(args.p)
    if args.coset is None:
        selected = decomposition.cosets
    else:
        if not 0 <= args.coset < len(decomposition.cosets):
            raise InvalidArgumentError(
                f"--coset must be in 0..{len(decomposition.cosets) - 1}"
            )
        selected = (decomposition.cosets[args.coset],)
    print(f"p = {args.p}: subgroup {list(decomposition.subgroup)}, "
          f"{len(decomposition.cosets)} cosets")
    print(
        f"(p-1)/3 = {profile.coset_count} = "
        f"2^{profile.two_exponent} * 3^{profile.three_exponent} * {profile.residual_factor}"
        f" -> tower-feasible: {profile.tower_feasible} (heuristic, not a proof)"
    )
    results = []
    for coset in selected:
        gc = periods.cardano_from_coset(args.p, coset, ctx)
        results.append(gc)
        print(
            f"coset {list(coset)}: center {_fmt_complex(gc.center)}, "
            f"R1 {_fmt(gc.R1)}, R2 {_fmt(gc.R2)}, "
            f"angle {_degrees(gc.theta)} degrees, residual {_fmt(gc.residual, 5)}"
        )
    _write_json(
        args.json,
        report.build_report(ctx.digits, general=results, profiles=[profile]),
    )
    return EXIT_OK


def cmd_render(args) -> int:
    ctx = make_context(_resolve_digits(args))
    tc = _selected_construction(args, ctx)
    args.out.write_bytes(render_svg(tc, RenderOptions(canvas=args.canvas), ctx))
    print(f"wrote {args.out}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (InvalidArgumentError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_ARGUMENTS
    except PrecisionError as exc:
        print(f"internal precision failure: {exc}", file=sys.stderr)
        return EXIT_PRECISION_FAILURE


def entry() -> None:
    sys.exit(main())
