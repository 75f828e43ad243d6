"""Command-line front end: one binary, one subcommand per operation.

Default output is terse TSV; --json switches to JSON Lines with big
integers rendered as decimal strings. Exit codes: 0 on success, 1 on
any validation or budget error, 2 when a scan emitted a
THEOREM_VIOLATION row (so CI can assert the theorems directly).
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import FactorizationOverflowError
from .duals import dual_u, dual_v
from .explorer import (
    ScanReport,
    characteristic_gap_scan,
    find_characteristic_factor,
    scan_integral_dual_v,
    squarefree_dual_scan,
    wss_scan,
)
from .lucas import InvalidParamsError, LucasParams, new_params, u, v
from .valuations import (
    AnchorOverflowError,
    DegenerateRecursionError,
    entry_point,
    v_p_dual_u,
    v_p_dual_v,
    v_p_u,
)


def _json_line(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _row(kind: str, params: LucasParams | None = None, **fields) -> dict:
    out: dict = {"kind": kind}
    if params is not None:
        out["P"] = str(params.P)
        out["Q"] = str(params.Q)
    for key, value in fields.items():
        if value is not None:
            out[key] = value
    out.setdefault("flags", [])
    return out


def _print_report(report: ScanReport, as_json: bool) -> int:
    lines = report.jsonl_lines() if as_json else report.tsv_lines()
    for line in lines:
        print(line)
    meta = report.metadata
    summary = " ".join(
        f"{key}={meta[key]}" for key in sorted(meta) if key != "bound_readings"
    )
    print(f"# {report.scan}: {len(report.rows)} row(s); {summary}", file=sys.stderr)
    return 2 if report.theorem_violations else 0


def _params(args: argparse.Namespace) -> LucasParams:
    return new_params(args.p, args.q)


def _cmd_lucas(args: argparse.Namespace) -> int:
    params = _params(args)
    value = u(params, args.n) if args.kind == "u" else v(params, args.n)
    if args.json:
        print(_json_line(_row(f"lucas-{args.kind}", params, n=args.n, value=str(value))))
    else:
        print(value)
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    params = _params(args)
    if args.kind == "u":
        value = dual_u(params, args.n)
        text, flag = str(value), "INTEGRAL"
    else:
        result = dual_v(params, args.n)
        text = str(result.value)
        flag = "INTEGRAL" if result.integral else "NON_INTEGRAL"
    if args.json:
        print(_json_line(_row(f"dual-{args.kind}", params, n=args.n, value=text, flags=[flag])))
    else:
        print(f"{text}\t{flag}")
    return 0


def _cmd_val(args: argparse.Namespace) -> int:
    params = _params(args)
    if args.of == "u":
        result = v_p_u(params, args.prime, args.n)
        exponent, branch = result.exponent, result.branch
    elif args.of == "dual-u":
        result = v_p_dual_u(params, args.prime, args.n)
        exponent, branch = result.exponent, result.branch
    else:
        exponent, branch = v_p_dual_v(params, args.prime, args.n), None
    if args.json:
        row = _row(
            f"val-{args.of}",
            params,
            prime=args.prime,
            n=args.n,
            valuation=exponent,
            branch=branch,
        )
        print(_json_line(row))
    else:
        print(f"{exponent}\t{branch}" if branch else str(exponent))
    return 0


def _cmd_entry(args: argparse.Namespace) -> int:
    params = _params(args)
    point = entry_point(params, args.prime)
    if args.json:
        row = _row(
            "entry",
            params,
            prime=args.prime,
            value=None if point.value is None else str(point.value),
            branch=point.branch.value,
        )
        print(_json_line(row))
    else:
        shown = "none" if point.value is None else point.value
        print(f"{shown}\t{point.branch.value}")
    return 0


def _cmd_char_factor(args: argparse.Namespace) -> int:
    params = _params(args)
    factor = find_characteristic_factor(params, args.n)
    if args.json:
        row = _row(
            "char-factor",
            params,
            n=args.n,
            value=None if factor is None else str(factor),
        )
        print(_json_line(row))
    else:
        print("none" if factor is None else factor)
    return 0


def _cmd_scan_integral(args: argparse.Namespace) -> int:
    report = scan_integral_dual_v(
        _params(args), args.max, via_valuations=args.via_valuations
    )
    return _print_report(report, args.json)


def _cmd_gap_scan(args: argparse.Namespace) -> int:
    return _print_report(characteristic_gap_scan(_params(args), args.max), args.json)


def _cmd_wss(args: argparse.Namespace) -> int:
    return _print_report(wss_scan(args.max), args.json)


def _cmd_squarefree(args: argparse.Namespace) -> int:
    return _print_report(squarefree_dual_scan(args.max), args.json)


def _add_params_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="parameter P")
    parser.add_argument("--q", type=int, required=True, help="parameter Q")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucas-duals",
        description="Lucas sequences, their Möbius duals, and p-adic valuation laws",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for kind in ("u", "v"):
        cmd = sub.add_parser(f"lucas-{kind}", help=f"exact {kind.upper()}_n")
        _add_params_options(cmd)
        cmd.add_argument("--n", type=int, required=True)
        cmd.add_argument("--json", action="store_true")
        cmd.set_defaults(func=_cmd_lucas, kind=kind)

    for kind in ("u", "v"):
        cmd = sub.add_parser(f"dual-{kind}", help=f"Möbius dual of {kind.upper()} at n")
        _add_params_options(cmd)
        cmd.add_argument("--n", type=int, required=True)
        cmd.add_argument("--json", action="store_true")
        cmd.set_defaults(func=_cmd_dual, kind=kind)

    cmd = sub.add_parser("val", help="closed-form p-adic valuation")
    _add_params_options(cmd)
    cmd.add_argument("--prime", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--of", choices=("u", "dual-u", "dual-v"), default="u")
    cmd.add_argument("--json", action="store_true")
    cmd.set_defaults(func=_cmd_val)

    cmd = sub.add_parser("entry", help="entry point of a prime")
    _add_params_options(cmd)
    cmd.add_argument("--prime", type=int, required=True)
    cmd.add_argument("--json", action="store_true")
    cmd.set_defaults(func=_cmd_entry)

    cmd = sub.add_parser("scan-integral", help="even indices with integral dual of V")
    _add_params_options(cmd)
    cmd.add_argument("--max", type=int, default=400)
    cmd.add_argument("--via-valuations", action="store_true")
    cmd.add_argument("--json", action="store_true")
    cmd.set_defaults(func=_cmd_scan_integral)

    cmd = sub.add_parser("char-factor", help="smallest prime entering exactly at n")
    _add_params_options(cmd)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--json", action="store_true")
    cmd.set_defaults(func=_cmd_char_factor)

    cmd = sub.add_parser("gap-scan", help="indices with no prime entering exactly there")
    _add_params_options(cmd)
    cmd.add_argument("--max", type=int, default=60)
    cmd.add_argument("--json", action="store_true")
    cmd.set_defaults(func=_cmd_gap_scan)

    cmd = sub.add_parser("wss", help="Wall-Sun-Sun scan over the Fibonacci sequence")
    cmd.add_argument("--max", type=int, default=10**6)
    cmd.add_argument("--json", action="store_true")
    cmd.set_defaults(func=_cmd_wss)

    cmd = sub.add_parser("squarefree-scan", help="non-squarefree Fibonacci duals of U")
    cmd.add_argument("--max", type=int, default=120)
    cmd.add_argument("--json", action="store_true")
    cmd.set_defaults(func=_cmd_squarefree)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; fold that into the
        # validation-error code and keep 0 for --help.
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (
        InvalidParamsError,
        DegenerateRecursionError,
        AnchorOverflowError,
        FactorizationOverflowError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
