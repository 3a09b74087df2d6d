"""Command-line surface: exact binomial medians, critical probabilities,
irrationality certificates, and the verification battery.

Every subcommand writes a single JSON document (or CSV body) to stdout;
diagnostics go to stderr only.  Identical invocations produce byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .critical import ExactRoot, certify, isolate_root
from .distribution import BinomialParams, cdf, pmf
from .median import median_binomial
from .rational import decimal_string, format_rational, parse_rational, shared_prefix_decimal
from .verify import verify_theorem

DEFAULT_DIGITS = 30


class CliError(Exception):
    """Usage-level failure; its message becomes the one-line diagnostic."""


def _emit(document: object) -> None:
    sys.stdout.write(json.dumps(document, separators=(",", ":")) + "\n")


def _width_for(digits: int) -> Fraction:
    return Fraction(1, 10 ** (digits + 5))


def _probability(text: str) -> Fraction:
    p = parse_rational(text)
    if not 0 <= p <= 1:
        raise CliError("p out of range")
    return p


def _check_digits(digits: int) -> int:
    if digits < 1:
        raise CliError("digits must be >= 1")
    return digits


def _check_k(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise CliError("k out of range")
    return k


def _thread_count(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    try:
        value = int(text)
    except ValueError:
        raise CliError(f"invalid thread count {text!r}") from None
    if value < 1:
        raise CliError("threads must be >= 1")
    return value


def cmd_median(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise CliError("n must be >= 0")
    result = median_binomial(args.n, _probability(args.p))
    _emit(result.to_json_dict())
    return 0


def _point_value(args: argparse.Namespace, fn) -> int:
    if args.n < 0:
        raise CliError("n must be >= 0")
    params = BinomialParams(args.n, _probability(args.p))
    value = fn(args.k, params)
    _emit(
        {
            "rational": format_rational(value),
            "decimal": decimal_string(value, DEFAULT_DIGITS),
        }
    )
    return 0


def cmd_pmf(args: argparse.Namespace) -> int:
    return _point_value(args, pmf)


def cmd_cdf(args: argparse.Namespace) -> int:
    return _point_value(args, cdf)


def cmd_critical(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise CliError("n must be >= 1")
    _check_k(args.n, args.k)
    digits = _check_digits(args.digits)
    enclosure = isolate_root(args.n, args.k, _width_for(digits))
    _emit(enclosure.to_json_dict(digits))
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise CliError("n must be >= 1")
    _check_k(args.n, args.k)
    certificate = certify(args.n, args.k)
    _emit(certificate.to_json_dict(DEFAULT_DIGITS))
    return 0


_TABLE_COLUMNS = ("n", "k", "kind", "value", "lo", "hi", "decimal")


def _table_rows_for_n(task: tuple[int, Fraction, int]) -> list[dict]:
    n, width, digits = task
    rows = []
    for k in range(1, n + 1):
        enclosure = isolate_root(n, k, width)
        if isinstance(enclosure, ExactRoot):
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "kind": "exact",
                    "value": format_rational(enclosure.root),
                    "lo": None,
                    "hi": None,
                    "decimal": decimal_string(enclosure.root, digits),
                }
            )
        else:
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "kind": "bracket",
                    "value": None,
                    "lo": format_rational(enclosure.lo),
                    "hi": format_rational(enclosure.hi),
                    "decimal": shared_prefix_decimal(enclosure.lo, enclosure.hi, digits),
                }
            )
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    if args.n_max < 1:
        raise CliError("n-max must be >= 1")
    digits = _check_digits(args.digits)
    threads = _thread_count(args.threads)
    width = _width_for(digits)
    tasks = [(n, width, digits) for n in range(1, args.n_max + 1)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            groups = list(pool.map(_table_rows_for_n, tasks))
    else:
        groups = [_table_rows_for_n(task) for task in tasks]
    rows = [row for group in groups for row in group]
    if args.format == "json":
        _emit(rows)
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(_TABLE_COLUMNS)
        for row in rows:
            writer.writerow(["" if row[c] is None else row[c] for c in _TABLE_COLUMNS])
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n_max < 1:
        raise CliError("n-max must be >= 1")
    if args.denom_max < 1:
        raise CliError("denom-max must be >= 1")
    if not 0 <= args.seed < 2**64:
        raise CliError("seed must fit in 64 unsigned bits")
    digits = _check_digits(args.digits)
    threads = _thread_count(args.threads)
    report = verify_theorem(
        args.n_max,
        denom_max=args.denom_max,
        width=_width_for(digits),
        seed=args.seed,
        threads=threads,
    )
    sys.stdout.write(report.to_json() + "\n")
    print(
        f"verify: n <= {args.n_max}, {'pass' if report.passed else 'FAIL'} "
        f"in {report.wall_time:.2f}s",
        file=sys.stderr,
    )
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binomedian",
        description="Exact binomial medians, certified critical probabilities, "
        "and per-instance irrationality certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("median", help="classify the median of B(n, p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True, help='rational "A/B" or integer "A"')
    p.set_defaults(handler=cmd_median)

    for name, text in (("pmf", "P(X = k)"), ("cdf", "P(X <= k)")):
        p = sub.add_parser(name, help=f"exact {text} for B(n, p)")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--p", required=True, help='rational "A/B" or integer "A"')
        p.set_defaults(handler=cmd_pmf if name == "pmf" else cmd_cdf)

    p = sub.add_parser("critical", help="certified enclosure of one critical probability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p.set_defaults(handler=cmd_critical)

    p = sub.add_parser("table", help="all critical probabilities up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", default="1", help='worker count or "auto"')
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("certify", help="irrationality certificate for one (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("verify", help="run the full theorem battery up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--denom-max", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p.add_argument("--threads", default="1", help='worker count or "auto"')
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
