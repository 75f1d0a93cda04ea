"""Command-line replay: ``burniat-replay <check> [--format text|jsonl]``.

Exit status is 0 when every report passes, 1 when any fails and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from burniat import checks
from burniat.errors import InvalidInputError
from burniat.plane import read_points
from burniat.reports import CheckReport

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit_text(reports: Sequence[CheckReport], axioms: Sequence[dict], out) -> None:
    for r in reports:
        print(f"{r.status}  {r.check_id}", file=out)
        print(f"    anchor:   {r.anchor}", file=out)
        if isinstance(r.claimed, dict):
            for key, want in r.claimed.items():
                got = r.computed.get(key, "<missing>") if isinstance(r.computed, dict) else r.computed
                mark = "ok" if got == want else "MISMATCH"
                print(f"    {key}: claimed={want!r} computed={got!r} [{mark}]", file=out)
        else:
            print(f"    claimed={r.claimed!r} computed={r.computed!r}", file=out)
        for key, value in r.details.items():
            if key == "table":
                print("    table (name, vector, incidence row):", file=out)
                for row in value:
                    print(f"      {row}", file=out)
            else:
                print(f"    {key}: {value}", file=out)
        if r.axioms_used:
            print(f"    axioms:   {', '.join(r.axioms_used)}", file=out)
    for a in axioms:
        print(f"ASSUMED  {a['axiom_id']}: {a['statement']}", file=out)
    passed = sum(r.passed for r in reports)
    print(f"{passed}/{len(reports)} checks passed", file=out)


def _emit_jsonl(reports: Sequence[CheckReport], axioms: Sequence[dict], out) -> None:
    for r in reports:
        print(r.to_json(), file=out)
    for a in axioms:
        print(json.dumps(a, sort_keys=True), file=out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "jsonl"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="fuzz seed for the plane configurations")
    common.add_argument("--points", default=argparse.SUPPRESS, help="file with five points, one 'a b c' per line")

    parser = argparse.ArgumentParser(
        prog="burniat-replay",
        description="Replay the lattice arithmetic behind the K^2 = 4 bidouble-plane classification.",
    )
    parser.add_argument("--format", choices=("text", "jsonl"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--points", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    lines = sub.add_parser("lines", parents=[common], help="enumerate the (-1)-curves")
    lines.add_argument("--n", type=int, default=5, help="number of blown-up points (0..8)")
    for name, text in (
        ("miyaoka", "bound on disjoint (-4)-curves"),
        ("ramification", "ramification residual contradictions"),
        ("c1c2c3", "no three disjoint (-4)-curves"),
        ("invariants", "Riemann-Roch values on S"),
        ("fijki", "double cover branched on F1 + E4 + E5"),
        ("step1", "extra double fibre contradiction"),
        ("pullback", "pullback lattice, Noether, genus of F_i"),
        ("cremona", "Cremona witnesses and Weyl orbit"),
        ("ne1e", "exhaustive search for d with h0(d) > 1 and -K - 2d effective"),
    ):
        sub.add_parser(name, parents=[common], help=text)
    for name, text in (("burniat", "Burniat branch data and normal crossings"), ("all", "every check")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--fuzz", type=int, default=1000, help="random configurations to certify (0 disables)")
    return parser


def run(args: argparse.Namespace) -> tuple[list[CheckReport], list[dict]]:
    points = read_points(args.points) if args.points else None
    cmd = args.command
    if cmd == "lines":
        if not 0 <= args.n <= 8:
            raise InvalidInputError(f"--n must be in 0..8, got {args.n}")
        return [checks.check_lines(args.n)], []
    if cmd == "ramification":
        return checks.check_ramification_residuals(), []
    if cmd == "burniat":
        return [checks.check_burniat(points, seed=args.seed, fuzz=args.fuzz)], []
    if cmd == "all":
        return checks.run_all(points, seed=args.seed, fuzz=args.fuzz), checks.axiom_ledger()
    single = {
        "miyaoka": checks.check_miyaoka,
        "c1c2c3": checks.check_c1c2c3,
        "invariants": checks.check_invariants,
        "fijki": checks.check_fijki,
        "step1": checks.check_step1,
        "pullback": checks.check_pullback,
        "cremona": checks.check_cremona,
        "ne1e": checks.check_ne1e,
    }
    return [single[cmd]()], []


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        reports, axioms = run(args)
    except InvalidInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    emit = _emit_jsonl if args.format == "jsonl" else _emit_text
    emit(reports, axioms, out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
