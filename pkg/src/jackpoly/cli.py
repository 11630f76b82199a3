"""Command-line interface: ``jackpoly compute | verify | table``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import ParseError, PartitionTooLong
from .jack import rodrigues_jack
from .partitions import parse_partition, partitions_of
from .serialize import coeff_text, coeff_to_json, render_plain, result_record, table_rows
from .verify import CHECKS, run_checks


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _alpha(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"--alpha expects P/Q, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes (default 1)")
    common.add_argument("--alpha", type=_alpha, default=None,
                        help="substitute an exact rational value P/Q for alpha when printing")

    parser = _Parser(prog="jackpoly", description="Jack polynomials from creation operators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="expand one J_lambda in the m-basis")
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 3,1,1")
    p.add_argument("--n", type=_positive, default=None, help="number of variables (default |lambda|)")
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    p = sub.add_parser("verify", parents=[common], help="run identity checks up to a weight")
    p.add_argument("--max-weight", type=_positive, default=4)
    p.add_argument("--checks", default=",".join(CHECKS),
                   help=f"comma-separated subset of: {', '.join(CHECKS)}")
    p.add_argument("--format", choices=["plain"], default="plain")

    p = sub.add_parser("table", parents=[common], help="export all coefficients up to a weight")
    p.add_argument("--max-weight", type=_nonneg, default=4)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", default=None, help="write to this path instead of stdout")
    return parser


def _csv_text(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def cmd_compute(args) -> int:
    try:
        lam = parse_partition(args.partition)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    n = args.n if args.n is not None else max(lam.weight, 1)
    try:
        result = rodrigues_jack(lam, n)
    except PartitionTooLong as exc:
        raise UsageError(str(exc)) from None
    if args.format == "plain":
        out = render_plain(result, args.alpha) + "\n"
    elif args.format == "json":
        out = json.dumps(result_record(result, args.alpha)) + "\n"
    else:
        rows = [["lambda", "n", "mu", "v"]]
        for mu, c in result.expansion:
            v = c if args.alpha is None else c.evaluate(args.alpha)
            rows.append([str(lam), str(n), str(mu), coeff_text(v, compact=True)])
        out = _csv_text(rows)
    sys.stdout.write(out)
    return 0


def cmd_verify(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown or not checks:
        raise UsageError(f"unknown check(s): {', '.join(unknown) or '(none given)'}; "
                         f"choose from {', '.join(CHECKS)}")
    summaries = run_checks(args.max_weight, checks, jobs=args.jobs)
    lines = [", ".join(s.line() for s in summaries)]
    failed = [s for s in summaries if s.first_failure is not None]
    if failed:
        o = failed[0].first_failure
        lines.append(f"counterexample [{o.check}] unit={_unit_text(o.unit)}")
        lines.append(o.detail)
    sys.stdout.write("\n".join(lines) + "\n")
    return 1 if failed else 0


def _unit_text(unit: tuple) -> str:
    return ", ".join(str(u) for u in unit)


def cmd_table(args) -> int:
    records = []
    for N in range(1, args.max_weight + 1):
        for lam in partitions_of(N):
            records.extend(table_rows(rodrigues_jack(lam, N), args.alpha))
    if args.format == "csv":
        rows = [["lambda", "mu", "v", "tilde_v"]]
        rows += [[str(r["lambda"]), str(r["mu"]), coeff_text(r["v"], compact=True),
                  coeff_text(r["tilde_v"], compact=True)] for r in records]
        out = _csv_text(rows)
    else:
        out = json.dumps([{"lambda": list(r["lambda"]), "mu": list(r["mu"]),
                           "v": coeff_to_json(r["v"]), "tilde_v": coeff_to_json(r["tilde_v"])}
                          for r in records]) + "\n"
    if args.output is None:
        sys.stdout.write(out)
        return 0
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    return 0


_COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "table": cmd_table}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"jackpoly: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
