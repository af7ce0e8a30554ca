"""Command-line interface: behrend <command> <expression> [options].

Exit codes: 0 success, 1 syntax error (with caret diagnostics), 2 domain
error (not finite colength, unit ideal, non-normal input to a normal-only
command, failed verification), 3 unsupported combination (no engine covers
the request).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from dataclasses import replace

from . import render
from .errors import DomainError, ParseError, UnsupportedError
from .expr import factors_text, ideal_text, parse
from .ideals import MonomialIdeal
from .newton import integral_closure, is_normal
from .normal_factor import Fan, factor_normal, fan_of
from .nu import BehrendReport, nu_monomial
from .towers import (
    TowerNuSummary,
    TowerProduct,
    noncomplete_product_nu,
    tower_length,
    two_tower_length,
)
from .verify import PRESETS, run_all, summarize

SCHEMA_VERSION = 1


def _envelope(kind: str, payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "kind": kind, **payload}, indent=2)


def ideal_json(ideal: MonomialIdeal) -> dict:
    return {"generators": [list(g) for g in ideal.generators], "text": ideal_text(ideal)}


def report_json(report: BehrendReport) -> dict:
    vertices = [list(report.components[0].edge.start)] if report.components else []
    vertices += [list(c.edge.end) for c in report.components]
    return {
        "nu": report.nu,
        "length": report.length,
        "normal": report.normal,
        "polygon": {"vertices": vertices},
        "components": [
            {
                "ray": list(c.edge.inward_ray),
                "step": list(c.edge.primitive_step),
                "lattice_length": c.edge.lattice_length,
                "e": c.e,
                "d": c.d,
                "contribution": c.contribution,
            }
            for c in report.components
        ],
    }


def fan_json(fan: Fan) -> dict:
    return {
        "rays": [list(r) for r in fan.rays],
        "cones": [
            {"rays": [list(u) for u in cone.rays], "index": cone.index, "label": cone.label}
            for cone in fan.cones
        ],
    }


def dynkin_json(summary: TowerNuSummary, product: TowerProduct) -> dict:
    diagram = summary.diagram
    return {
        "nu": summary.nu,
        "length": summary.length,
        "nodes": [
            {
                "level": n.level,
                "members": list(n.members),
                "factors": [list(f) for f in n.factors],
                "self_intersection": n.self_intersection,
                "multiplicity": n.multiplicity,
                "surviving": n.surviving,
            }
            for n in diagram.nodes
        ],
        "edges": [list(e) for e in diagram.edges],
    }


def _towers_length(product: TowerProduct):
    if product.all_monomial:
        return product.expand().colength()
    if len(product.towers) == 1:
        return tower_length(product.towers[0])
    if len(product.towers) == 2 and product.all_complete:
        return two_tower_length(*product.towers)
    raise UnsupportedError(
        "no exact length route for this product; only monomial products, "
        "single towers and cross-branch complete pairs have one"
    )


def _report_text(report: BehrendReport) -> str:
    lines = [
        f"nu = {report.nu}",
        f"length = {report.length}",
        f"normal = {'true' if report.normal else 'false'}",
        "components (ray, e, d, d*e):",
    ]
    for c in report.components:
        beta, alpha = c.edge.inward_ray
        lines.append(f"  ({beta}, {alpha})  e={c.e}  d={c.d}  {c.contribution}")
    if not report.normal:
        lines.append("note: component count is an upper bound for non-normal ideals")
    return "\n".join(lines)


def _summary_text(summary: TowerNuSummary, product: TowerProduct) -> str:
    lines = [f"nu = {summary.nu}"]
    if summary.length is not None:
        lines.append(f"length = {summary.length}")
    lines.append("nodes (level, multiplicity, surviving):")
    for node in summary.diagram.nodes:
        flag = "kept" if node.surviving else "contracted"
        lines.append(f"  level {node.level}  mult {node.multiplicity}  [{flag}]")
    return "\n".join(lines)


def _write_svg(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(content)


def _run_command(args) -> int:
    as_json = args.format == "json"
    if args.command == "verify":
        return _run_verify(args)

    elaborated = parse(args.expr)

    if args.command == "length":
        if elaborated.ideal is not None:
            value = elaborated.ideal.require_fat_point().colength()
        else:
            value = _towers_length(elaborated.require_towers())
        print(_envelope("length", {"length": value}) if as_json else f"length = {value}")
        return 0

    if args.command == "nu":
        if elaborated.ideal is not None:
            report = nu_monomial(elaborated.ideal)
            print(_envelope("nu", report_json(report)) if as_json else _report_text(report))
        else:
            product = elaborated.require_towers()
            summary = noncomplete_product_nu(product)
            if as_json:
                print(_envelope("nu", dynkin_json(summary, product)))
            else:
                print(_summary_text(summary, product))
        return 0

    if args.command == "normalize":
        closure = integral_closure(elaborated.require_ideal().require_fat_point())
        print(_envelope("ideal", ideal_json(closure)) if as_json else ideal_text(closure))
        return 0

    if args.command == "normal?":
        normal = is_normal(elaborated.require_ideal().require_fat_point())
        if as_json:
            print(_envelope("normal", {"normal": normal}))
        else:
            print("normal" if normal else "not normal")
        return 0

    if args.command == "factor":
        factors = factor_normal(elaborated.require_ideal())
        if as_json:
            payload = {
                "factors": [
                    {"alpha": f.alpha, "beta": f.beta, "delta": f.delta} for f in factors
                ]
            }
            print(_envelope("factorization", payload))
        else:
            print(factors_text(factors))
        return 0

    if args.command == "fan":
        fan = fan_of(elaborated.require_ideal())
        if args.svg:
            _write_svg(args.svg, render.fan_svg(fan))
        print(_envelope("fan", fan_json(fan)) if as_json else render.fan_text(fan))
        return 0

    if args.command == "ferrers":
        diagram = elaborated.require_ideal().require_fat_point().ferrers()
        if args.svg:
            _write_svg(args.svg, render.ferrers_svg(diagram))
        if as_json:
            print(_envelope("ferrers", {"column_heights": list(diagram.column_heights)}))
        else:
            print(render.ferrers_text(diagram))
        return 0

    if args.command == "dynkin":
        product = elaborated.require_towers()
        summary = noncomplete_product_nu(product)
        if args.svg:
            _write_svg(args.svg, render.dynkin_svg(summary.diagram, product))
        if as_json:
            print(_envelope("dynkin", dynkin_json(summary, product)))
        else:
            print(render.dynkin_dot(summary.diagram, product))
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def _run_verify(args) -> int:
    bounds = PRESETS[args.bounds]
    if args.p_max is not None:
        bounds = replace(bounds, closure_p_max=args.p_max)
    results = run_all(seed=args.seed, bounds=bounds)
    counts = summarize(results)
    if args.format == "json":
        payload = {
            "seed": args.seed,
            "bounds": bounds.name,
            "counts": counts,
            "results": [
                {
                    "name": r.name,
                    "instance": r.instance,
                    "expected": str(r.expected),
                    "actual": str(r.actual),
                    "status": r.status,
                }
                for r in results
            ],
        }
        print(_envelope("verify", payload))
    else:
        print(f"seed = {args.seed}, bounds = {bounds.name}")
        by_name: dict[str, int] = {}
        for r in results:
            by_name[r.name] = by_name.get(r.name, 0) + 1
        for name in sorted(by_name):
            passed = sum(1 for r in results if r.name == name and r.status == "pass")
            print(f"  {name}: {passed}/{by_name[name]} pass")
        for r in results:
            if r.status != "pass":
                print(f"  {r.status.upper()} {r.name} [{r.instance}]: "
                      f"expected {r.expected}, got {r.actual}")
        print(
            f"total: {counts['pass']} pass, {counts['fail']} fail, "
            f"{counts['inconclusive']} inconclusive"
        )
    return 0 if counts["fail"] == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="behrend",
        description="Invariants of plane fat points: lengths, closures, fans, "
        "factorizations and Behrend numbers.",
    )
    default_format = os.environ.get("BEHREND_FORMAT", "text")
    if default_format not in ("text", "json"):
        default_format = "text"
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, expr=True, svg=False, aliases=()):
        sub = subparsers.add_parser(name, help=help_text, aliases=list(aliases))
        if expr:
            sub.add_argument("expr", help="ideal or tower expression")
        sub.add_argument(
            "--format",
            choices=("text", "json"),
            default=default_format,
            help="output format (default from BEHREND_FORMAT, else text)",
        )
        if svg:
            sub.add_argument("--svg", metavar="PATH", help="also write a standalone SVG")
        else:
            sub.set_defaults(svg=None)
        return sub

    add("length", "colength of the fat point")
    add("nu", "Behrend number with per-component breakdown")
    add("normalize", "integral closure of the ideal")
    add("normal?", "test whether the ideal is normal", aliases=("normal",))
    add("factor", "factor a normal ideal into n(a,b) atoms")
    add("fan", "toric fan of the blowup of a normal ideal", svg=True)
    add("ferrers", "staircase diagram of the ideal", svg=True)
    add("dynkin", "exceptional-curve diagram of a tower product (DOT)", svg=True)
    verify = add("verify", "run the brute-force verification suite", expr=False)
    verify.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    verify.add_argument(
        "--bounds", choices=sorted(PRESETS), default="default", help="bounds preset"
    )
    verify.add_argument(
        "--p-max",
        type=int,
        default=None,
        dest="p_max",
        help="certifying power for the definitional closure oracle "
        "(default: the bounds preset's value)",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "normal":
        args.command = "normal?"
    try:
        return _run_command(args)
    except ParseError as error:
        print(f"syntax error: {error.diagnostic()}", file=sys.stderr)
        return 1
    except DomainError as error:
        print(f"domain error: {error}", file=sys.stderr)
        return 2
    except UnsupportedError as error:
        print(f"unsupported: {error}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
