"""Command-line interface.

    spoofperfect search [--n-max N] [--k-max K] [--alpha-max A] [--format csv|json|table] ...
    spoofperfect verify S N X K ALPHA
    spoofperfect table [--fast] [--golden FILE]
    spoofperfect robin S N X K ALPHA | --descartes N X

Exit codes: 0 success, 1 verification or table mismatch, 2 usage error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict, dataclass, fields
from decimal import Decimal, InvalidOperation

from spoofperfect.arithmetic import RangeTooLargeError, factorize, format_factorization, geometric_sum
from spoofperfect.golden import diff_rows, golden_rows, load_rows
from spoofperfect.robin import descartes_check, expected_threshold, robin_check
from spoofperfect.search import (
    DEFAULT_ALPHA_MAX,
    DEFAULT_BLOCK_SIZE,
    DEFAULT_K_MAX,
    FAST_N_MAX,
    TABLE_N_MAX,
    ConfigError,
    SearchConfig,
    search,
)
from spoofperfect.spoof import SpoofNumber, verify_spoof

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

CSV_HEADER = (
    "s", "n", "x", "k", "alpha", "x_is_prime", "x_coprime_n", "s_odd",
    "x_factorization", "robin_lhs", "robin_rhs",
)  # fmt: skip


@dataclass(frozen=True)
class ResultRecord:
    s: int
    n: int
    x: int
    k: int
    alpha: int
    x_is_prime: bool
    x_coprime_n: bool
    s_odd: bool
    x_factorization: str
    robin_lhs: str
    robin_rhs: str

    @classmethod
    def from_spoof(cls, sp: SpoofNumber) -> ResultRecord:
        report = robin_check(sp)
        if report.applicable:
            lhs, rhs = f"{report.lhs_float:.6g}", f"{report.rhs:.6g}"
        else:
            lhs = rhs = "n/a"
        return cls(
            sp.s, sp.n, sp.x, sp.k, sp.alpha,
            sp.x_is_prime, sp.x_coprime_n, sp.s_odd,
            format_factorization(sp.x), lhs, rhs,
        )  # fmt: skip

    @classmethod
    def from_dict(cls, d: dict) -> ResultRecord:
        return cls(**{f.name: d[f.name] for f in fields(cls)})

    def as_dict(self) -> dict:
        return asdict(self)

    def csv_cells(self) -> list[str]:
        return [json.dumps(v) if isinstance(v, bool) else str(v) for v in asdict(self).values()]


def render(records: list[ResultRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in records], indent=2) + "\n"
    rows = [list(CSV_HEADER)] + [r.csv_cells() for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_HEADER))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def parse_int(text: str) -> int:
    """Integers, also written as 1.6e7 or 100_000, as long as they are exact."""
    try:
        value = Decimal(text.replace("_", ""))
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not value.is_finite() or value != value.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def _add_search_flags(p: argparse.ArgumentParser, with_bounds: bool) -> None:
    if with_bounds:
        p.add_argument("--n-min", type=parse_int, default=2)
        p.add_argument("--n-max", type=parse_int, default=TABLE_N_MAX)
        p.add_argument("--k-max", type=parse_int, default=DEFAULT_K_MAX)
        p.add_argument("--alpha-max", type=parse_int, default=DEFAULT_ALPHA_MAX)
        for flag, what in (
            ("odd-only", "keep only odd s"),
            ("require-x-prime", "keep only prime x"),
            ("require-x-coprime", "keep only x coprime to n"),
        ):
            p.add_argument(f"--{flag}", action=argparse.BooleanOptionalAction, default=True, help=what)
    p.add_argument("--threads", type=parse_int, default=0, help="worker threads, 0 = one per CPU")
    p.add_argument("--block-size", type=parse_int, default=DEFAULT_BLOCK_SIZE)
    p.add_argument("--progress", action="store_true", help="report finished blocks on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spoofperfect", description="Search for and verify spoof multiperfect numbers."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="exhaustive search over n")
    _add_search_flags(p, with_bounds=True)
    p.add_argument("--format", choices=("csv", "json", "table"), default="table")

    p = sub.add_parser("verify", help="check sigma(n) S_alpha(x) = k n x and s = n x")
    for name in ("s", "n", "x", "k", "alpha"):
        p.add_argument(name, type=parse_int)

    p = sub.add_parser("table", help="reproduce the published table and diff it")
    p.add_argument("--fast", action="store_true", help=f"only n <= {FAST_N_MAX}")
    p.add_argument("--golden", metavar="CSV", help="golden rows (s,n,x,k,alpha) instead of the built-in table")
    _add_search_flags(p, with_bounds=False)

    p = sub.add_parser("robin", help="evaluate the Robin-type bound for a spoof")
    p.add_argument("values", type=parse_int, nargs="*", metavar="S N X K ALPHA")
    p.add_argument("--descartes", type=parse_int, nargs=2, metavar=("N", "X"))
    return parser


def _stream(args):
    def on_block(done, total, found):
        for sp in found:
            print(f"found s={sp.s} n={sp.n} x={sp.x} k={sp.k} alpha={sp.alpha}", file=sys.stderr)
        if args.progress:
            print(f"block {done}/{total} done", file=sys.stderr)

    return on_block


def cmd_search(args) -> int:
    config = SearchConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        k_max=args.k_max,
        alpha_max=args.alpha_max,
        odd_only=args.odd_only,
        require_x_prime=args.require_x_prime,
        require_x_coprime=args.require_x_coprime,
        block_size=args.block_size,
    )
    report = search(config, workers=args.threads, on_block=_stream(args))
    sys.stdout.write(render([ResultRecord.from_spoof(sp) for sp in report.results], args.format))
    print(
        f"{len(report.results)} results, {report.n_scanned} values of n scanned in {report.elapsed:.1f}s",
        file=sys.stderr,
    )
    return EXIT_OK


def _identity(sp: SpoofNumber) -> tuple[int, int, int, int]:
    sigma_n = 1
    for p, e in factorize(sp.n):
        sigma_n *= (p ** (e + 1) - 1) // (p - 1)
    s_alpha = geometric_sum(sp.x, sp.alpha)
    return sigma_n, s_alpha, sigma_n * s_alpha, sp.k * sp.n * sp.x


def _check_domain(n, x, k, alpha):
    if n < 2 or x < 2 or k < 1 or alpha < 1:
        raise ConfigError("need n >= 2, x >= 2, k >= 1 and alpha >= 1")


def cmd_verify(args) -> int:
    _check_domain(args.n, args.x, args.k, args.alpha)
    sp = SpoofNumber(args.s, args.n, args.x, args.k, args.alpha)
    if sp.s != sp.n * sp.x:
        print(f"INVALID: s != n*x ({sp.s} != {sp.n * sp.x})")
        return EXIT_FAIL
    ok = verify_spoof(sp)
    sigma_n, s_alpha, lhs, rhs = _identity(sp)
    rel = "=" if ok else "!="
    print("VALID" if ok else "INVALID")
    print(f"  sigma(n) * S_alpha(x) = {sigma_n} * {s_alpha} = {lhs}")
    print(f"  k * n * x = {rhs}  ({lhs} {rel} {rhs})")
    if ok:
        flags = (sp.x_is_prime, sp.x_coprime_n, sp.s_odd)
        print("  x prime: {}, x coprime to n: {}, s odd: {}".format(*(str(f).lower() for f in flags)))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table(args) -> int:
    n_max = FAST_N_MAX if args.fast else TABLE_N_MAX
    expected = golden_rows(n_max, load_rows(args.golden)) if args.golden else golden_rows(n_max)
    config = SearchConfig(n_max=n_max, block_size=args.block_size)
    report = search(config, workers=args.threads, on_block=_stream(args))
    diff = diff_rows(expected, [sp.key for sp in report.results])
    for line in diff.lines():
        print(line)
    print(f"search took {report.elapsed:.1f}s", file=sys.stderr)
    return EXIT_OK if diff.ok else EXIT_FAIL


def cmd_robin(args) -> int:
    if args.descartes:
        if args.values:
            raise ConfigError("give either S N X K ALPHA or --descartes N X")
        n, x = args.descartes
        _check_domain(n, x, 2, 1)
        sp = SpoofNumber(n * x, n, x, 2, 1)
    else:
        if len(args.values) != 5:
            raise ConfigError("robin needs S N X K ALPHA")
        s, n, x, k, alpha = args.values
        _check_domain(n, x, k, alpha)
        sp = SpoofNumber(s, n, x, k, alpha)
    if sp.s != sp.n * sp.x or not verify_spoof(sp):
        print(f"INVALID: {sp.key} is not a spoof k-perfect number of order alpha")
        return EXIT_FAIL
    report = descartes_check(sp.n, sp.x) if args.descartes else robin_check(sp)
    print(f"lhs        = k x / S_alpha(x) = {report.lhs.numerator}/{report.lhs.denominator} ~ {report.lhs_float:.6g}")
    print(f"rhs        = e^gamma ln ln n ~ {report.rhs:.6g}  (gamma = {report.gamma_used!r})")
    print(f"applicable = {str(report.applicable).lower()}")
    print(f"satisfied  = {str(report.satisfied).lower()}")
    note = " (conditional on the Riemann Hypothesis)" if report.applicable else ""
    print(f"verdict    = {report.verdict}{note}")
    print(f"naive k-perfect threshold: ln ln n > k e^-gamma = {expected_threshold(sp.k):.6g}")
    return EXIT_OK


COMMANDS = {"search": cmd_search, "verify": cmd_verify, "table": cmd_table, "robin": cmd_robin}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return COMMANDS[args.command](args)
    except RangeTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
