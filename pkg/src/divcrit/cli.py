"""Command-line front end: derive, check, reduce, gdc, table, and audit.

Exit codes: 0 = affirmative/clean, 1 = negative verdict or findings, 2 =
usage or input error.  Output is ASCII, LF-terminated, and byte-stable for
identical invocations.  Numeral arguments are read in the -b base; prefix
negative numerals with '--' so they are not taken for flags.
"""

from __future__ import annotations

import argparse
import sys

from .errors import DivisibilityError, InvalidDivisor, NoSoundCandidate
from .numeral import Numeral
from .params import ParameterSet, candidates, classify, representations, select_best
from .rules import GdcForm, reduce
from .tables import (
    audit_paper_table,
    format_finding,
    generate,
    render,
    rule_text,
)
from .verify import equivalence_audit, resolve_params, verdict


def _add_base(parser: argparse.ArgumentParser, default: int | None = 10) -> None:
    parser.add_argument("-b", "--base", type=int, default=default,
                        help="radix of numerals and rules (default %(default)s)")


def _add_divisor(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", "--divisor", type=int, required=True,
                        help="divisor under test")


def _add_q_max(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q-max", type=int, default=3, dest="q_max",
                        help="largest |q| searched for N = q*n (default 3)")


def _add_overrides(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--w", type=int, default=None,
                        help="override the w parameter (requires --u)")
    parser.add_argument("--u", type=int, default=None,
                        help="override the u parameter (requires --w)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divcrit",
        description="digit-based divisibility rules for any divisor in any radix",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    derive = sub.add_parser("derive", help="derive rule parameters for a divisor")
    _add_base(derive)
    _add_divisor(derive)
    _add_q_max(derive)
    derive.add_argument("--all", action="store_true",
                        help="print the best rule for every q = 1..q_max")
    derive.add_argument("--bound", type=int, default=None,
                        help="scan bound confirming each soundness label")

    check = sub.add_parser("check", help="decide divisibility of a numeral")
    _add_base(check)
    _add_divisor(check)
    _add_q_max(check)
    _add_overrides(check)
    check.add_argument("--method", choices=("restricted", "gdc", "oracle"),
                       default="restricted")
    check.add_argument("numeral", help="numeral in the -b base")

    reduce_p = sub.add_parser("reduce", help="show the iterated reduction trace")
    _add_base(reduce_p)
    _add_divisor(reduce_p)
    _add_q_max(reduce_p)
    _add_overrides(reduce_p)
    reduce_p.add_argument("--bound", type=int, default=None,
                          help="stop once |R| <= bound (default t**3)")
    reduce_p.add_argument("--figure", default=None, metavar="PATH",
                          help="also write a trace figure to PATH")
    reduce_p.add_argument("numeral", help="numeral in the -b base")

    gdc_p = sub.add_parser("gdc", help="evaluate the all-digits criterion")
    _add_base(gdc_p)
    _add_divisor(gdc_p)
    _add_q_max(gdc_p)
    _add_overrides(gdc_p)
    gdc_p.add_argument("--show-coefficients", action="store_true",
                       dest="show_coefficients")
    gdc_p.add_argument("numeral", help="numeral in the -b base")

    table_p = sub.add_parser("table", help="generate a rule table for a range")
    _add_base(table_p)
    _add_q_max(table_p)
    table_p.add_argument("--from", type=int, required=True, dest="start",
                         help="first divisor (decimal)")
    table_p.add_argument("--to", type=int, required=True, dest="stop",
                         help="last divisor (decimal, inclusive)")
    table_p.add_argument("--format", choices=("text", "csv"), default="text")
    table_p.add_argument("--figure", default=None, metavar="PATH",
                         help="also write a parameter figure to PATH")

    audit_p = sub.add_parser("audit",
                             help="audit a reference table or a generated range")
    _add_base(audit_p, default=None)
    _add_q_max(audit_p)
    audit_p.add_argument("--paper-table", type=int, choices=(1, 2), default=None,
                         dest="paper_table",
                         help="audit bundled reference table 1 (decimal) or 2 (octal)")
    audit_p.add_argument("--from", type=int, default=None, dest="start")
    audit_p.add_argument("--to", type=int, default=None, dest="stop")
    audit_p.add_argument("--bound", type=int, default=None,
                         help="witness scan bound (default n*t**2 per row)")
    audit_p.add_argument("--figure", default=None, metavar="PATH",
                         help="also write a findings figure to PATH")

    return parser


def _derive_line(ps: ParameterSet, label: str) -> str:
    return (f"q={ps.q} N={ps.N} w={ps.w} u={ps.u} "
            f"rule={rule_text(ps.u, ps.w)} soundness={label}")


def cmd_derive(args: argparse.Namespace) -> int:
    n, t = args.divisor, args.base
    if args.all:
        for q in range(1, args.q_max + 1):
            pool = [ParameterSet(n=n, t=t, q=q, N=q * n, w=w, u=u)
                    for w, u in representations(q * n, t)]
            try:
                best = select_best(pool, require_sound=True)
            except NoSoundCandidate:
                best = select_best(pool, require_sound=False)
            soundness = classify(best, args.bound)
            print(_derive_line(best, soundness.label))
        return 0
    try:
        best = select_best(candidates(n, t, args.q_max), require_sound=True)
    except NoSoundCandidate:
        print(f"no sound rule for n={n} base {t} within q-max {args.q_max}")
        return 1
    soundness = classify(best, args.bound)
    print(_derive_line(best, soundness.label))
    return 0


def _resolved_params(args: argparse.Namespace) -> ParameterSet:
    return resolve_params(args.divisor, args.base, args.q_max,
                          w=args.w, u=args.u)


def cmd_check(args: argparse.Namespace) -> int:
    if args.method == "oracle" and (args.w is not None or args.u is not None):
        raise ValueError("--w/--u overrides conflict with --method oracle")
    x = Numeral.parse(args.numeral, args.base)
    ps = _resolved_params(args) if args.w is not None or args.u is not None else None
    divisible = verdict(x, args.divisor, method=args.method,
                        q_max=args.q_max, params=ps)
    print("divisible" if divisible else "not divisible")
    return 0 if divisible else 1


def cmd_reduce(args: argparse.Namespace) -> int:
    x = Numeral.parse(args.numeral, args.base)
    ps = _resolved_params(args)
    trace = reduce(x.to_value(), ps, threshold=args.bound)
    for k, value in enumerate(trace.values):
        print(f"step {k}: R = {value}")
    divisible = trace.final % args.divisor == 0
    print("divisible" if divisible else "not divisible")
    if args.figure:
        from .report import save_reduction_figure

        save_reduction_figure(trace, args.figure)
    return 0 if divisible else 1


def cmd_gdc(args: argparse.Namespace) -> int:
    x = Numeral.parse(args.numeral, args.base)
    ps = _resolved_params(args)
    form = GdcForm.bind(x, ps)
    if args.show_coefficients:
        body = ", ".join(str(c) for c in form.coefficients)
        print(f"coefficients = [{body}]")
    print(f"C = {form.value}")
    divisible = form.value % args.divisor == 0
    print("divisible" if divisible else "not divisible")
    return 0 if divisible else 1


def _check_range(start: int, stop: int) -> None:
    if start < 2 or stop < start:
        raise ValueError(f"invalid divisor range [{start}, {stop}]")


def cmd_table(args: argparse.Namespace) -> int:
    _check_range(args.start, args.stop)
    rows = generate(args.base, range(args.start, args.stop + 1), args.q_max)
    print(render(rows, args.format), end="")
    if args.figure:
        from .report import save_table_figure

        save_table_figure(rows, args.figure)
    return 0


def cmd_audit(args: argparse.Namespace) -> int:
    if args.paper_table is not None:
        if args.base is not None or args.start is not None or args.stop is not None:
            raise ValueError("--paper-table conflicts with -b/--from/--to")
        findings = audit_paper_table(args.paper_table)
        for finding in findings:
            print(format_finding(finding))
        if args.figure:
            from .report import save_audit_figure

            save_audit_figure(findings, args.figure)
        return 1 if findings else 0
    if args.base is None or args.start is None or args.stop is None:
        raise ValueError("audit needs --paper-table or all of -b, --from, --to")
    _check_range(args.start, args.stop)
    t = args.base
    rows = generate(t, range(args.start, args.stop + 1), args.q_max)
    failures = 0
    for row in rows:
        if not row.rule:
            continue
        ps = ParameterSet(n=row.n, t=t, q=row.q, N=row.N, w=row.w, u=row.u)
        bound = args.bound if args.bound is not None else row.n * t * t
        report = equivalence_audit(ps, bound)
        if not report.verdict.is_full:
            failures += 1
            print(f"n={row.n}: rule {row.rule!r} failed its own audit: "
                  f"witness={report.verdict.witness}")
    return 1 if failures else 0


_HANDLERS = {
    "derive": cmd_derive,
    "check": cmd_check,
    "reduce": cmd_reduce,
    "gdc": cmd_gdc,
    "table": cmd_table,
    "audit": cmd_audit,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if getattr(args, "divisor", None) is not None and args.divisor < 2:
            raise InvalidDivisor(f"divisor must be >= 2, got {args.divisor}")
        return _HANDLERS[args.command](args)
    except (DivisibilityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main(sys.argv[1:]))
