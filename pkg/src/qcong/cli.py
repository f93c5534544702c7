"""Command-line interface.

Exit codes: 0 when every requested check passes, 1 when at least one check
fails, 2 for usage, parse, or evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .engine import (
    all_passed,
    build_suite_context,
    check_progression,
    check_relation,
    run_catalogue,
    scan_progressions,
    series_c,
    series_ck,
    suite_json,
    verify_congruent,
    verify_identity,
)
from .oracle import oracle_table
from .qexpr import ParseError, evaluate, parse
from .series import (
    EXACT,
    MOD64,
    NonUnitError,
    OrderError,
    RingMismatchError,
    dump_json_dict,
    dump_text,
)


def _ring_for(name: str):
    return MOD64 if name == "mod64" else EXACT

def _is_pow2(m: int) -> bool:
    return m >= 2 and not (m & (m - 1))


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated integers, got {text!r}")
    return a, b


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}")


def _series_spec(text: str) -> tuple[str, Optional[int]]:
    if text == "C":
        return "C", None
    if text.startswith("Ck:"):
        try:
            k = int(text[3:])
        except ValueError:
            k = 0
        if k >= 1:
            return "Ck", k
    raise argparse.ArgumentTypeError(
        f"expected C or Ck:K with K >= 1, got {text!r}")


def _k_spec(text: str):
    if text == "limit":
        return "limit"
    try:
        k = int(text)
    except ValueError:
        k = 0
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a k >= 1 or 'limit', got {text!r}")
    return k


def _print_report(report) -> int:
    line = report.status
    if report.witness is not None:
        line += f"  witness: {json.dumps(report.witness)}"
    print(line)
    return 0 if report.status == "pass" else 1


def _cmd_expand(args) -> int:
    series = evaluate(parse(args.expr), args.order, _ring_for(args.ring))
    if args.json:
        print(json.dumps(dump_json_dict(series)))
    else:
        print(dump_text(series))
    return 0


def _cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    if args.ring == "mod64" and args.mod is None:
        parser.error("--ring mod64 needs --mod (exact equality needs the exact ring)")
    ring = _ring_for(args.ring)
    lhs = evaluate(parse(args.lhs), args.order, ring)
    rhs = evaluate(parse(args.rhs), args.order, ring)
    if args.mod is None:
        report = verify_identity(lhs, rhs, args.order)
    else:
        report = verify_congruent(lhs, rhs, args.mod, args.order)
    return _print_report(report)


def _build_series(kind: str, k: Optional[int], order: int, modulus: int):
    ring = MOD64 if _is_pow2(modulus) else EXACT
    if kind == "C":
        return series_c(order, ring)
    return series_ck(k, order, ring)


def _cmd_check(args) -> int:
    a, b = args.progression
    order = a * args.nmax + b + 1
    series = _build_series(*args.series, order, args.mod)
    report = check_progression(series, a, b, args.mod, n_max=args.nmax)
    return _print_report(report)


def _cmd_relation(args) -> int:
    a1, b1 = args.lhs
    a2, b2 = args.rhs
    sign = 1 if args.sign == "+" else -1
    order = max(a1 * args.nmax + b1, a2 * args.nmax + b2) + 1
    series = _build_series(*args.series, order, args.mod)
    report = check_relation(series, a1, b1, sign, a2, b2, args.mod,
                            n_max=args.nmax)
    return _print_report(report)


def _cmd_suite(args) -> int:
    ctx = build_suite_context(args.order_identity, args.order_scan, args.kmax)
    reports = run_catalogue(ctx)
    for report in reports:
        line = f"{report.claim_id:<22} {report.status}"
        if report.witness is not None:
            line += f"  witness: {json.dumps(report.witness)}"
        print(line)
    counts = {status: sum(r.status == status for r in reports)
              for status in ("pass", "fail", "order-too-small")}
    print(f"{len(reports)} claims: {counts['pass']} pass, "
          f"{counts['fail']} fail, {counts['order-too-small']} order-too-small")
    if args.json is not None:
        doc = suite_json(reports, args.order_identity, args.order_scan,
                         args.kmax)
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    return 0 if all_passed(reports) else 1


def _cmd_oracle(args) -> int:
    for row in oracle_table(args.k, args.nmax):
        print(f"{row.n}\t{row.count}")
    return 0


def _cmd_scan(args) -> int:
    order = args.amax * (args.nmax + 1)
    ring = MOD64 if all(_is_pow2(m) for m in args.mods) else EXACT
    series = series_c(order, ring)
    for claim in scan_progressions(series, args.amax, args.mods, args.nmax):
        print(claim)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcong",
        description="Truncated q-series arithmetic and congruence checking "
                    "for two-color partition counting functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="evaluate an expression and dump "
                                             "its coefficients")
    p_expand.add_argument("expr")
    p_expand.add_argument("--order", type=int, required=True)
    p_expand.add_argument("--ring", choices=("exact", "mod64"), default="exact")
    p_expand.add_argument("--json", action="store_true")
    p_expand.set_defaults(func=_cmd_expand)

    p_verify = sub.add_parser("verify", help="compare two expressions "
                                             "coefficientwise")
    p_verify.add_argument("lhs")
    p_verify.add_argument("rhs")
    p_verify.add_argument("--order", type=int, required=True)
    p_verify.add_argument("--mod", type=int)
    p_verify.add_argument("--ring", choices=("exact", "mod64"), default="exact")
    p_verify.set_defaults(func=lambda args: _cmd_verify(args, p_verify))

    p_check = sub.add_parser("check", help="check a single congruence "
                                           "progression")
    p_check.add_argument("--series", type=_series_spec, required=True,
                         metavar="C|Ck:K")
    p_check.add_argument("--progression", type=_pair, required=True,
                         metavar="A,B")
    p_check.add_argument("--mod", type=int, required=True)
    p_check.add_argument("--nmax", type=int, required=True)
    p_check.set_defaults(func=_cmd_check)

    p_rel = sub.add_parser("relation", help="check a two-progression relation")
    p_rel.add_argument("--series", type=_series_spec, required=True,
                       metavar="C|Ck:K")
    p_rel.add_argument("--lhs", type=_pair, required=True, metavar="A1,B1")
    p_rel.add_argument("--rhs", type=_pair, required=True, metavar="A2,B2")
    p_rel.add_argument("--sign", choices=("+", "-"), required=True)
    p_rel.add_argument("--mod", type=int, required=True)
    p_rel.add_argument("--nmax", type=int, required=True)
    p_rel.set_defaults(func=_cmd_relation)

    p_suite = sub.add_parser("suite", help="run the full claim catalogue")
    p_suite.add_argument("--order-identity", type=int, default=400)
    p_suite.add_argument("--order-scan", type=int, default=40000)
    p_suite.add_argument("--kmax", type=int, default=2)
    p_suite.add_argument("--json", metavar="PATH")
    p_suite.set_defaults(func=_cmd_suite)

    p_oracle = sub.add_parser("oracle", help="count partitions by direct "
                                             "enumeration")
    p_oracle.add_argument("--k", type=_k_spec, required=True, metavar="K|limit")
    p_oracle.add_argument("--nmax", type=int, required=True)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_scan = sub.add_parser("scan", help="search for vanishing progressions")
    p_scan.add_argument("--amax", type=int, required=True)
    p_scan.add_argument("--mods", type=_int_list, required=True,
                        metavar="M1,M2,...")
    p_scan.add_argument("--nmax", type=int, required=True)
    p_scan.set_defaults(func=_cmd_scan)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, NonUnitError, OrderError, RingMismatchError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
