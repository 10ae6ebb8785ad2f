"""Command-line client for the toolkit.

Thin layer over the same handlers the HTTP service uses, so ``--format json``
output is byte-for-byte the service payload.  Exit codes: 0 on success, 1 on
a domain error (error JSON on stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .errormodel import curve as eval_curve
from .serialize import csv_text, curve_csv
from .service import handlers
from .service.models import (
    CheckRequest,
    ConcatRequest,
    ConcatResponse,
    CurveRequest,
    PseudothresholdRequest,
    RationalIn,
    ScanRequest,
)


def _emit_json(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")


def _table(rows: list[Sequence[Any]], header: Sequence[str]) -> None:
    widths = [len(h) for h in header]
    text_rows = [[str(cell) for cell in row] for row in rows]
    for row in text_rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    sys.stdout.write(fmt.format(*header).rstrip() + "\n")
    for row in text_rows:
        sys.stdout.write(fmt.format(*row).rstrip() + "\n")


def _slack_text(slack: Optional[dict]) -> str:
    if slack is None:
        return "-"
    num, den = int(slack["num"]), int(slack["den"])
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def _cmd_check(args: argparse.Namespace) -> int:
    degeneracy = None
    if args.degenerate:
        degeneracy = "degenerate"
    elif args.nondegenerate:
        degeneracy = "nondegenerate"
    response = handlers.check(CheckRequest(code=args.code, degeneracy=degeneracy))
    if args.format == "json":
        _emit_json(response.model_dump())
    elif args.format == "csv":
        rows = [
            [b.bound, b.status, _slack_text(b.slack.model_dump() if b.slack else None), b.reason or ""]
            for b in response.bounds
        ]
        sys.stdout.write(csv_text(["bound", "status", "slack", "reason"], rows))
    else:
        sys.stdout.write(f"code: {response.code.notation}\n")
        rows = [
            [b.bound, b.status, _slack_text(b.slack.model_dump() if b.slack else None), b.reason or ""]
            for b in response.bounds
        ]
        _table(rows, ["bound", "status", "slack", "note"])
    return 0


def _concat_row(result) -> list:
    return [
        result.code.notation,
        result.procedure,
        result.outer.notation,
        result.inner.notation,
    ]


def _cmd_concat(args: argparse.Namespace) -> int:
    response: ConcatResponse = handlers.concat_codes(
        ConcatRequest(
            outer=args.outer,
            inner=args.inner,
            force=args.force,
            both_orders=args.both_orders,
        )
    )
    if args.format == "json":
        _emit_json(response.model_dump())
        return 0
    header = ["result", "procedure", "outer", "inner"]
    if response.result is not None:
        rows = [_concat_row(response.result)]
    else:
        rows = [_concat_row(response.forward), _concat_row(response.reverse)]
    if args.format == "csv":
        sys.stdout.write(csv_text(header, rows))
    else:
        _table(rows, header)
        if response.ebit_difference is not None:
            sys.stdout.write(f"ebit difference (forward - reverse): {response.ebit_difference}\n")
    return 0


def _load_poly_file(path: str) -> list[RationalIn]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ValueError("polynomial file must hold a JSON array of {num, den} coefficients")
    return [RationalIn(**entry) for entry in raw]


def _cmd_pseudothreshold(args: argparse.Namespace) -> int:
    coefficients = _load_poly_file(args.poly_file) if args.poly_file else None
    request = PseudothresholdRequest(
        outer=args.outer, inner=args.inner, coefficients=coefficients, tol=args.tol
    )
    response = handlers.pseudothreshold_handler(request)
    if args.curve:
        poly, _ = handlers.resolve_polynomial(args.outer, args.inner, coefficients)
        points = eval_curve(poly, 0, "0.5", 501)
        with open(args.curve, "w", encoding="utf-8") as fh:
            fh.write(curve_csv(points))
    if args.format == "json":
        _emit_json(response.model_dump())
    else:
        value = "none (no fixed point at or below 0.5)" if response.value is None else f"{response.value:.9f}"
        sys.stdout.write(f"{response.label}: pseudothreshold = {value}\n")
        for note in response.notes:
            sys.stdout.write(f"note: {note}\n")
    return 0


def _cmd_scan_eahb(args: argparse.Namespace) -> int:
    response = handlers.scan(
        ScanRequest(
            outer_family=args.outer_family,
            inner=args.inner,
            n_min=args.n_min,
            n_max=args.n_max,
            reversed=args.reversed,
        )
    )
    if args.format == "json":
        _emit_json(response.model_dump())
        return 0
    rows = [
        [r.n, r.notation, r.sphere_count, r.budget, r.verdict, f"{r.phi:.12f}"]
        for r in response.rows
    ]
    header = ["n", "notation", "sphere_count", "budget", "verdict", "phi"]
    if args.format == "csv":
        sys.stdout.write(csv_text(header, rows))
    else:
        _table(rows, header)
        sys.stdout.write(f"onset: {response.onset}\n")
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    response = handlers.family_info(args.name, args.n_min, args.n_max)
    if args.format == "json":
        _emit_json(response.model_dump())
        return 0
    rows = [[m.n, m.code.notation] for m in response.members]
    if args.format == "csv":
        sys.stdout.write(csv_text(["n", "notation"], rows))
    else:
        sys.stdout.write(f"{response.name}: {response.description}\n")
        _table(rows, ["n", "notation"])
    return 0


def _cmd_table1(args: argparse.Namespace) -> int:
    response = handlers.table1()
    rows = [[r.notation, r.r, r.r_e, r.r_n, r.delta] for r in response.rows]
    header = ["code", "r", "r_e", "r_n", "delta"]
    if args.format == "json":
        _emit_json(response.model_dump())
    elif args.format == "csv":
        sys.stdout.write(csv_text(header, rows))
    else:
        _table(rows, header)
        for note in response.notes:
            sys.stdout.write(f"note: {note}\n")
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    coefficients = _load_poly_file(args.poly_file) if args.poly_file else None
    response = handlers.curve_handler(
        CurveRequest(
            outer=args.outer,
            inner=args.inner,
            coefficients=coefficients,
            p_min=args.p_min,
            p_max=args.p_max,
            steps=args.steps,
        )
    )
    if args.format == "json":
        _emit_json(response.model_dump())
    else:
        sys.stdout.write(csv_text(["p", "p_L"], [[pt.p, pt.p_l] for pt in response.points]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eaqecc",
        description="Exact-arithmetic analysis of entanglement-assisted quantum codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, choices=("table", "json", "csv")) -> None:
        p.add_argument("--format", choices=choices, default="table")

    p_check = sub.add_parser("check", help="evaluate every bound for a code")
    p_check.add_argument("code", help='code notation, e.g. "[[8,1,5;1]]" or "[6,3,4]_4"')
    flags = p_check.add_mutually_exclusive_group()
    flags.add_argument("--degenerate", action="store_true")
    flags.add_argument("--nondegenerate", action="store_true")
    add_format(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_concat = sub.add_parser("concat", help="concatenate two EA codes")
    p_concat.add_argument("outer")
    p_concat.add_argument("inner")
    p_concat.add_argument("--both-orders", action="store_true", dest="both_orders")
    p_concat.add_argument(
        "--force", type=int, choices=(1, 2), default=None,
        help="1 = divisible route, 2 = non-divisible route",
    )
    add_format(p_concat)
    p_concat.set_defaults(func=_cmd_concat)

    p_pt = sub.add_parser("pseudothreshold", help="fixed point of a logical-error polynomial")
    p_pt.add_argument("--outer", help="outer polynomial name (five13, four131, rep3132, rep3132_set)")
    p_pt.add_argument("--inner", help="inner polynomial name; omit to use --outer alone")
    p_pt.add_argument("--poly-file", dest="poly_file", help="JSON array of {num, den} coefficients")
    p_pt.add_argument("--tol", type=float, default=1e-9)
    p_pt.add_argument("--curve", help="also write the polynomial curve to this CSV file")
    add_format(p_pt, choices=("table", "json"))
    p_pt.set_defaults(func=_cmd_pseudothreshold)

    p_scan = sub.add_parser("scan-eahb", help="EA Hamming scan of a family concatenation")
    p_scan.add_argument("--outer-family", required=True, dest="outer_family")
    p_scan.add_argument("--inner", required=True, help="fixed code notation or constant name (C1, C2, C4)")
    p_scan.add_argument("--n-min", type=int, default=None, dest="n_min")
    p_scan.add_argument("--n-max", type=int, default=None, dest="n_max")
    p_scan.add_argument(
        "--reversed", action="store_true",
        help="swap roles: fixed code as outer, family as inner",
    )
    add_format(p_scan)
    p_scan.set_defaults(func=_cmd_scan_eahb)

    p_family = sub.add_parser("family", help="list family members")
    p_family.add_argument("name")
    p_family.add_argument("--n-min", type=int, default=None, dest="n_min")
    p_family.add_argument("--n-max", type=int, default=None, dest="n_max")
    add_format(p_family)
    p_family.set_defaults(func=_cmd_family)

    p_table = sub.add_parser("table1", help="rate summary of the bundled concatenation examples")
    add_format(p_table)
    p_table.set_defaults(func=_cmd_table1)

    p_curve = sub.add_parser("curve", help="evaluate a logical-error polynomial on a grid")
    p_curve.add_argument("--outer")
    p_curve.add_argument("--inner")
    p_curve.add_argument("--poly-file", dest="poly_file")
    p_curve.add_argument("--p-min", default="0", dest="p_min")
    p_curve.add_argument("--p-max", default="0.5", dest="p_max")
    p_curve.add_argument("--steps", type=int, default=101)
    add_format(p_curve, choices=("csv", "json"))
    p_curve.set_defaults(func=_cmd_curve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
