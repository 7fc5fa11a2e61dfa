"""Batch command-line front end with machine-readable JSON output.

Four subcommands: `series` prints one generating series, `count` one counting
value, `hilbert` dumps an ideal with its series by both engines, and `verify`
streams identity-check reports one JSON object per line.  Exit codes: 0 all
checks pass, 1 an identity mismatched, 2 usage or parameter error, 3 an
internal exact-division failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterator, TextIO

from .errors import NonDivisible
from .hilbert import GradedQuotient, build_L_k, build_L_k_ell, build_L_riJ, hp_brute, hp_split
from .partitions import IdentityParams, count_C, count_D, count_E, series_E
from .qseries import eq_up_to
from .recursion import (
    CheckReport,
    c_series,
    verify_c_expansion,
    verify_hp_expansion,
    verify_hp_step,
    verify_limits,
    verify_main,
    verify_mn_tables,
)

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_ARITHMETIC = 3


def _dumps(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_range(text: str) -> list[int]:
    """Parse 'A' or 'A..B' into an inclusive integer range."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _parse_i(text: str) -> list[int] | None:
    """Parse the i selector: an explicit value/range, or None for 'all'."""
    if text == "all":
        return None
    return _parse_range(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gga-verify",
        description="Exact verification of the Gollnitz-Gordon-Andrews identity family",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_series = sub.add_parser("series", help="print one generating series as JSON")
    p_series.add_argument("kind", choices=["c", "e"], help="product side (c) or gap side (e)")
    p_series.add_argument("--r", type=int, required=True)
    p_series.add_argument("--index", type=int, help="series index for kind c")
    p_series.add_argument("--i", type=int, help="anchor for kind e")
    p_series.add_argument("--J", type=int, default=0)
    p_series.add_argument("--N", type=int, default=20)
    p_series.add_argument("--format", choices=["json", "table"], default="json")
    p_series.add_argument("--out", metavar="PATH")

    p_count = sub.add_parser("count", help="print one counting value as JSON")
    p_count.add_argument("kind", choices=["c", "d", "e"])
    p_count.add_argument("--r", type=int, required=True)
    p_count.add_argument("--i", type=int, required=True)
    p_count.add_argument("--J", type=int, default=0)
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--format", choices=["json", "table"], default="json")
    p_count.add_argument("--out", metavar="PATH")

    p_hilbert = sub.add_parser("hilbert", help="dump an ideal and its series by both engines")
    p_hilbert.add_argument("--family", choices=["LriJ", "Lk", "Lkl"], required=True)
    p_hilbert.add_argument("--r", type=int, required=True)
    p_hilbert.add_argument("--i", type=int)
    p_hilbert.add_argument("--J", type=int, default=0)
    p_hilbert.add_argument("--k", type=int)
    p_hilbert.add_argument("--ell", type=int)
    p_hilbert.add_argument("--N", type=int, default=20)
    p_hilbert.add_argument("--format", choices=["json", "table"], default="json")
    p_hilbert.add_argument("--out", metavar="PATH")

    p_verify = sub.add_parser("verify", help="stream identity-check reports, one JSON per line")
    p_verify.add_argument("--r", default="2", metavar="A[..B]")
    p_verify.add_argument("--i", default="all", metavar="K|all")
    p_verify.add_argument("--J", default="0", metavar="A[..B]")
    p_verify.add_argument("--N", type=int, default=40)
    p_verify.add_argument("--lemmas", action="store_true", help="add lemma-level checks")
    p_verify.add_argument(
        "--ordered",
        action="store_true",
        help="guarantee parameter order in the stream (always true of this runner)",
    )
    p_verify.add_argument("--format", choices=["json", "table"], default="json")
    p_verify.add_argument("--out", metavar="PATH")
    return parser


def _cmd_series(args: argparse.Namespace, emit: Callable[[str], None]) -> int:
    if args.kind == "c":
        if args.index is None:
            raise ValueError("series c requires --index")
        series = c_series(args.r, args.index, args.N)
    else:
        if args.i is None:
            raise ValueError("series e requires --i")
        series = series_E(args.r, args.i, args.J, args.N)
    if args.format == "table":
        for j, coeff in enumerate(series.coeffs):
            emit(f"{j}\t{coeff}")
    else:
        emit(_dumps(series.to_json_dict()))
    return EXIT_PASS


def _cmd_count(args: argparse.Namespace, emit: Callable[[str], None]) -> int:
    if args.kind == "c":
        value = count_C(IdentityParams(args.r, args.i, args.J, args.n), args.n)
    elif args.kind == "d":
        value = count_D(args.r, args.i, args.n)
    else:
        value = count_E(args.r, args.i, args.J, args.n)
    payload = {
        "kind": args.kind,
        "params": {"r": args.r, "i": args.i, "J": args.J},
        "n": args.n,
        "count": str(value),
    }
    if args.format == "table":
        emit(f"{args.kind}\tr={args.r} i={args.i} J={args.J}\tn={args.n}\t{value}")
    else:
        emit(_dumps(payload))
    return EXIT_PASS


def _cmd_hilbert(args: argparse.Namespace, emit: Callable[[str], None]) -> int:
    if args.family == "LriJ":
        if args.i is None:
            raise ValueError("family LriJ requires --i")
        ideal = build_L_riJ(args.r, args.i, args.J, args.N)
        params = {"r": args.r, "i": args.i, "J": args.J, "N": args.N}
    elif args.family == "Lk":
        if args.k is None:
            raise ValueError("family Lk requires --k")
        ideal = build_L_k(args.k, args.r, args.N)
        params = {"k": args.k, "r": args.r, "N": args.N}
    else:
        if args.k is None or args.ell is None:
            raise ValueError("family Lkl requires --k and --ell")
        ideal = build_L_k_ell(args.k, args.ell, args.r, args.N)
        params = {"k": args.k, "ell": args.ell, "r": args.r, "N": args.N}
    quotient = GradedQuotient(ideal)
    brute = hp_brute(quotient)
    split = hp_split(quotient)
    agree, _ = eq_up_to(brute, split, args.N)
    payload = {
        "family": args.family,
        "params": params,
        "min_var": ideal.min_var,
        "generators": [str(g) for g in ideal.gens],
        "hp_brute": brute.to_json_dict(),
        "hp_split": split.to_json_dict(),
        "engines_agree": agree,
    }
    if args.format == "table":
        emit(f"family {args.family}  min_var={ideal.min_var}  engines_agree={agree}")
        for g in ideal.gens:
            emit(f"  {g}")
        emit("  hp: " + ",".join(str(c) for c in brute.coeffs))
    else:
        emit(_dumps(payload))
    return EXIT_PASS if agree else EXIT_MISMATCH


def _verify_reports(args: argparse.Namespace) -> Iterator[CheckReport]:
    r_values = _parse_range(args.r)
    i_selector = _parse_i(args.i)
    j_values = _parse_range(args.J)
    n = args.N
    for r in r_values:
        i_values = list(range(1, r + 1)) if i_selector is None else i_selector
        for i in i_values:
            for J in j_values:
                IdentityParams(r, i, J, n)  # fail fast before any computation
    for r in r_values:
        i_values = list(range(1, r + 1)) if i_selector is None else i_selector
        for i in i_values:
            for J in j_values:
                yield verify_main(r, i, J, n)
                if args.lemmas:
                    ell = r - i + 1
                    yield verify_hp_step(r, 2 * J + 1, ell, J, n)
                    for d in (J + 1, J + 2):
                        yield verify_hp_expansion(r, i, J, d, n)
                        yield verify_c_expansion(r, ell, J, d, n)
                    yield verify_mn_tables(r, i, J, J + 3, n)
                    yield verify_limits(r, i, J, n)


def _cmd_verify(args: argparse.Namespace, emit: Callable[[str], None]) -> int:
    all_pass = True
    for report in _verify_reports(args):
        if args.format == "table":
            status = "PASS" if report.passed else "FAIL"
            emit(f"{status}\t{report.check}\t{_dumps(report.params)}")
        else:
            emit(_dumps(report.to_json_dict()))
        all_pass = all_pass and report.passed
    return EXIT_PASS if all_pass else EXIT_MISMATCH


def run(argv: list[str] | None = None, stdout: TextIO | None = None) -> int:
    """Parse arguments, execute, and return the exit code."""
    out_stream = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS

    sink: TextIO | None = None
    try:
        if getattr(args, "out", None):
            sink = open(args.out, "w", encoding="utf-8")

        def emit(line: str) -> None:
            target = sink if sink is not None else out_stream
            target.write(line + "\n")
            target.flush()

        handler = {
            "series": _cmd_series,
            "count": _cmd_count,
            "hilbert": _cmd_hilbert,
            "verify": _cmd_verify,
        }[args.command]
        return handler(args, emit)
    except NonDivisible as exc:
        print(f"arithmetic error: {exc}", file=sys.stderr)
        return EXIT_ARITHMETIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if sink is not None:
            sink.close()


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
