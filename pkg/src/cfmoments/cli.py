"""Command-line surface: exact emission of convergents, moment verification,
positivity classification, Hankel scans and Fibonacci-ratio checks.

All rational inputs are parsed exactly ('7/2', '2', '0.5'); all exact values
are emitted as strings, never as binary floats.  Exit codes: 0 success (and
all identities matched), 1 a verification identity failed, 2 invalid
arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import shlex
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .cfrac import (
    TwoPeriodicParams,
    convergents,
    generalized_fibonacci,
)
from .exactnum import DomainError, QuadElem, decimal_string, parse_rational
from .hankel import scan_kperiodic
from .measures import binet_measure, classify_positivity, moment_measure

Row = Dict[str, Any]
Emission = Tuple[Dict[str, Any], List[Row], Dict[str, Any], int]


def _fmt(value: Any) -> str:
    if isinstance(value, (Fraction, QuadElem)):
        return str(value)
    return str(value)


def _expand_args_file(argv: List[str]) -> List[str]:
    """Splice in tokens from an --args-file (one flag per line)."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        path: Optional[str] = None
        if token == "--args-file":
            if i + 1 >= len(argv):
                raise DomainError("--args-file needs a path")
            path = argv[i + 1]
            i += 2
        elif token.startswith("--args-file="):
            path = token.split("=", 1)[1]
            i += 1
        else:
            out.append(token)
            i += 1
            continue
        with open(path, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if line and not line.startswith("#"):
                    out.extend(shlex.split(line))
    return out


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("json", "csv", "plain"),
        default="plain",
        help="emission format (default plain)",
    )
    parser.add_argument("--output", default=None, help="write to file instead of stdout")
    parser.add_argument(
        "--digits", type=int, default=12, help="decimal preview digits (default 12)"
    )


def _params_triple(args: argparse.Namespace) -> TwoPeriodicParams:
    return TwoPeriodicParams(
        parse_rational(args.a), parse_rational(args.b), parse_rational(args.w)
    )


def cmd_convergents(args: argparse.Namespace) -> Emission:
    params = _params_triple(args)
    if args.n_max < 0:
        raise DomainError("--n-max must be >= 0")
    rows = []
    for n, conv in enumerate(convergents(params, args.n_max)):
        rows.append(
            {
                "n": n,
                "numerator": _fmt(conv.numerator),
                "denominator": _fmt(conv.denominator),
                "value": _fmt(conv.value),
                "decimal": decimal_string(conv.value, args.digits),
            }
        )
    meta = {
        "command": "convergents",
        "a": _fmt(params.a),
        "b": _fmt(params.b),
        "w": _fmt(params.w),
        "n_max": args.n_max,
    }
    return meta, rows, {"status": "ok"}, 0


def cmd_verify(args: argparse.Namespace) -> Emission:
    params = _params_triple(args)
    if args.n_max < 0:
        raise DomainError("--n-max must be >= 0")
    if args.truncate is not None and args.truncate < 1:
        raise DomainError("--truncate must be >= 1")
    measure = moment_measure(params)
    rows = []
    mismatches = 0
    for n, conv in enumerate(convergents(params, args.n_max)):
        mom = measure.moment(n)
        match = mom == conv.value
        if not match:
            mismatches += 1
        row = {
            "n": n,
            "s": _fmt(conv.value),
            "moment": _fmt(mom),
            "match": match,
            "decimal": decimal_string(conv.value, args.digits),
        }
        if args.truncate is not None:
            value, bound = measure.truncated_moment(n, args.truncate)
            within = abs(mom - value) <= bound
            if not within:
                mismatches += 1
            row["truncated"] = _fmt(value)
            row["tail_bound"] = _fmt(bound)
            row["within_bound"] = within
        rows.append(row)
    meta = {
        "command": "verify",
        "a": _fmt(params.a),
        "b": _fmt(params.b),
        "w": _fmt(params.w),
        "n_max": args.n_max,
    }
    if args.truncate is not None:
        meta["truncate"] = args.truncate
    verdict = {"all_match": mismatches == 0, "mismatches": mismatches}
    return meta, rows, verdict, 0 if mismatches == 0 else 1


def cmd_classify(args: argparse.Namespace) -> Emission:
    params = _params_triple(args)
    verdict = classify_positivity(params)
    out = {
        "positive": verdict.is_positive,
        "even_ratio_nonneg": verdict.even_ratio_nonneg,
        "a_ge_b": verdict.a_ge_b,
        "w_above_even_threshold": verdict.w_above_even_threshold,
        "w_above_order_threshold": verdict.w_above_order_threshold,
        "even_ratio": _fmt(verdict.even_ratio),
        "odd_ratio": _fmt(verdict.odd_ratio),
        "even_ratio_decimal": verdict.even_ratio.decimal(args.digits),
        "odd_ratio_decimal": verdict.odd_ratio.decimal(args.digits),
    }
    meta = {
        "command": "classify",
        "a": _fmt(params.a),
        "b": _fmt(params.b),
        "w": _fmt(params.w),
    }
    return meta, [], out, 0


def cmd_hankel_scan(args: argparse.Namespace) -> Emission:
    periods = [parse_rational(p) for p in args.periods.split(",") if p.strip()]
    w = parse_rational(args.w)
    if args.max_order < 0:
        raise DomainError("--max-order must be >= 0")
    report = scan_kperiodic(periods, w, args.max_order)
    rows = []
    for order in range(report.max_order + 1):
        rows.append(
            {
                "order": order,
                "determinant": _fmt(report.determinants[order]),
                "psd": report.psd[order],
                "decimal": decimal_string(report.determinants[order], args.digits),
            }
        )
    meta = {
        "command": "hankel-scan",
        "periods": [_fmt(p) for p in report.periods],
        "w": _fmt(report.w),
        "max_order": report.max_order,
    }
    verdict = {
        "all_psd": report.first_not_psd is None,
        "first_not_psd": report.first_not_psd,
        "negative_determinants": sum(1 for d in report.determinants if d < 0),
    }
    return meta, rows, verdict, 0


def cmd_fibonacci(args: argparse.Namespace) -> Emission:
    coeff = parse_rational(args.a)
    if args.n_max < 0:
        raise DomainError("--n-max must be >= 0")
    n_max = args.n_max
    fib = generalized_fibonacci(coeff, n_max + 3)
    ordinary = generalized_fibonacci(1, n_max + 1)
    params = TwoPeriodicParams(coeff, coeff, 1 / coeff)
    ratio_measure = moment_measure(params)
    shifted_measure = ratio_measure.with_head(1, coeff)
    binet = binet_measure()
    rows = []
    mismatches = 0
    for n in range(n_max + 1):
        ratio = fib[n + 1] / fib[n + 2]
        shifted = fib[n + 3] / fib[n + 2]
        ratio_mom = ratio_measure.moment(n)
        shifted_mom = shifted_measure.moment(n)
        binet_mom = binet.moment(n)
        ratio_ok = ratio_mom == ratio
        shifted_ok = shifted_mom == shifted
        binet_ok = binet_mom == ordinary[n + 1]
        mismatches += sum(1 for ok in (ratio_ok, shifted_ok, binet_ok) if not ok)
        rows.append(
            {
                "n": n,
                "gen_fib": _fmt(fib[n]),
                "ratio": _fmt(ratio),
                "ratio_moment": _fmt(ratio_mom),
                "ratio_match": ratio_ok,
                "shifted_ratio": _fmt(shifted),
                "shifted_ratio_moment": _fmt(shifted_mom),
                "shifted_ratio_match": shifted_ok,
                "fib": _fmt(ordinary[n + 1]),
                "binet_moment": _fmt(binet_mom),
                "binet_match": binet_ok,
            }
        )
    meta = {"command": "fibonacci", "a": _fmt(coeff), "n_max": n_max}
    verdict = {"all_match": mismatches == 0, "mismatches": mismatches}
    return meta, rows, verdict, 0 if mismatches == 0 else 1


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def _render(fmt: str, meta: Dict[str, Any], rows: List[Row], verdict: Dict[str, Any]) -> str:
    if fmt == "json":
        return json.dumps(
            {"params": meta, "rows": rows, "verdict": verdict}, indent=2
        ) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        else:
            writer = csv.DictWriter(buf, fieldnames=list(verdict.keys()))
            writer.writeheader()
            writer.writerow({k: _csv_cell(v) for k, v in verdict.items()})
        return buf.getvalue()
    lines = []
    for key, value in meta.items():
        lines.append(f"{key}: {_csv_cell(value)}")
    if rows:
        headers = list(rows[0].keys())
        widths = {
            h: max(len(h), *(len(_csv_cell(r[h])) for r in rows)) for h in headers
        }
        lines.append("  ".join(h.ljust(widths[h]) for h in headers))
        for row in rows:
            lines.append(
                "  ".join(_csv_cell(row[h]).ljust(widths[h]) for h in headers)
            )
    for key, value in verdict.items():
        lines.append(f"{key}: {_csv_cell(value)}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfmoments",
        description=(
            "Exact convergents, moment measures and Hankel positivity of "
            "periodic continued fractions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convergents", help="emit N_n, D_n, s_n rows")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--w", default="0")
    p.add_argument("--n-max", dest="n_max", type=int, default=10)
    _add_output_options(p)
    p.set_defaults(handler=cmd_convergents)

    p = sub.add_parser(
        "verify", help="check closed-form moments against s_n, exactly"
    )
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--w", default="0")
    p.add_argument("--n-max", dest="n_max", type=int, default=20)
    p.add_argument(
        "--truncate",
        type=int,
        default=None,
        metavar="K",
        help="also cross-check each moment against a K-term truncated sum",
    )
    _add_output_options(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("classify", help="exact positivity classification")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--w", default="0")
    _add_output_options(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser(
        "hankel-scan", help="Hankel determinants and PSD verdicts of a k-periodic run"
    )
    p.add_argument("--periods", required=True, help="comma-separated positive rationals")
    p.add_argument("--w", default="1")
    p.add_argument("--max-order", dest="max_order", type=int, default=8)
    _add_output_options(p)
    p.set_defaults(handler=cmd_hankel_scan)

    p = sub.add_parser(
        "fibonacci",
        help="generalized Fibonacci numbers, their ratios, and measure cross-checks",
    )
    p.add_argument("--a", required=True, help="recurrence coefficient (> 0)")
    p.add_argument("--n-max", dest="n_max", type=int, default=10)
    _add_output_options(p)
    p.set_defaults(handler=cmd_fibonacci)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        expanded = _expand_args_file(raw)
    except (OSError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser = build_parser()
    try:
        args = parser.parse_args(expanded)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        meta, rows, verdict, code = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _render(args.format, meta, rows, verdict)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
