"""Command-line frontend: ``permdiagram <verb> ...``.

Structured output goes to stdout, diagnostics to stderr. Exit status 2
means bad input, 1 means a failed check or internal round-trip failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .diagram import build_diagram
from .dyck import DyckPathError, parse_path, path_features, tunnels
from .involution import ReconstructionError, decompose, phi
from .lab import MAX_N, SUITES, EnumerationLimitError, CountTable, distribution_table, run_suite
from .perm import PatternClass, PermutationError, parse_permutation, tail_pairs

EXIT_FAIL = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


def _perm(text: str):
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise _UsageError(str(exc)) from exc


def _m(value: int) -> int:
    if value < 2:
        raise _UsageError(f"--m must be at least 2, got {value}")
    return value


def _fmt(seq) -> str:
    return "(" + ", ".join(map(str, seq)) + ")"


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def cmd_diagram(args) -> str:
    return _dump(build_diagram(_perm(args.perm)).to_json())


def cmd_phi(args) -> str:
    pi = _perm(args.perm)
    m = _m(args.m)
    sigma, tr = phi(pi, m, trace=True)
    lines = [str(sigma)]
    if args.trace:
        low = sorted(decompose(pi, m).low_squares)
        high = sorted(s.row for s in build_diagram(pi).squares if s.rank >= m - 2)
        lines += [
            "low_squares: " + " ".join(f"({r},{c})" for r, c in low),
            "tail_rows: " + " ".join(map(str, high)),
            f"r = {_fmt(tr.r)}",
            f"c = {_fmt(tr.c)}",
            f"e = {_fmt(tr.e)}",
            f"c' = {_fmt(tr.c_prime)}",
        ]
    return "\n".join(lines) + "\n"


def cmd_stats(args) -> str:
    pi = _perm(args.perm)
    m = _m(args.m)
    a = sorted(tail_pairs(pi, PatternClass.A(m)))
    b = sorted(tail_pairs(pi, PatternClass.B(m)))
    return _dump({
        "perm": str(pi), "m": m, "a": len(a), "b": len(b),
        "a_pairs": [list(p) for p in a], "b_pairs": [list(p) for p in b],
    })


def cmd_dyck(args) -> str:
    try:
        d = parse_path(args.word)
    except DyckPathError as exc:
        raise _UsageError(str(exc)) from exc
    record = path_features(d).to_json()
    record = {"path": d.steps, "n": d.n, **record,
              "tunnels": [{"left_x": t.left_x, "right_x": t.right_x,
                           "height": t.height, "length": t.length}
                          for t in tunnels(d)]}
    return _dump(record)


def cmd_enumerate(args) -> str:
    if not 1 <= args.n <= MAX_N:
        raise _UsageError(f"--n must be in 1..{MAX_N}, got {args.n}")
    m = _m(args.m)
    kinds = ("a", "b") if args.stat == "both" else (args.stat,)
    table: CountTable = distribution_table(args.n, (m,), kinds, jobs=args.jobs)
    return table.to_csv() if args.format == "csv" else table.to_json()


def cmd_verify(args) -> tuple[str, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    out = []
    ok_all = True
    for name in names:
        try:
            results = run_suite(name, args.n_max, jobs=args.jobs)
        except EnumerationLimitError as exc:
            raise _UsageError(str(exc)) from exc
        out += [r.line() for r in results]
        ok = all(r.ok for r in results)
        ok_all &= ok
        span = f"n={results[0].n}..{results[-1].n}" if results else "n=(none)"
        out.append(f"{name}: {span} {'PASS' if ok else 'FAIL'}")
    out.append(f"summary: {'PASS' if ok_all else 'FAIL'}")
    return "\n".join(out) + "\n", 0 if ok_all else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="permdiagram",
        description="Ranked permutation diagrams, tail-pair statistics and the "
                    "involution exchanging them.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    s = sub.add_parser("diagram", help="ranked diagram as JSON")
    s.add_argument("perm")
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("phi", help="image of a permutation under the involution")
    s.add_argument("perm")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--trace", action="store_true",
                   help="also print low squares, tail rows, r, c, e, c'")
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("stats", help="a_m and b_m with their tail pairs, as JSON")
    s.add_argument("perm")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("dyck", help="returns, high peaks, valleys and tunnels of a path")
    s.add_argument("word")
    s.set_defaults(func=cmd_dyck)

    jobs = os.cpu_count() or 1

    s = sub.add_parser("enumerate", help="distribution of a_m / b_m over S_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--stat", choices=("a", "b", "both"), default="both")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--jobs", type=int, default=jobs)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="run an exhaustive verification suite")
    s.add_argument("suite", choices=list(SUITES) + ["all"])
    s.add_argument("--n-max", type=int, default=7)
    s.add_argument("--jobs", type=int, default=jobs)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        result = args.func(args)
    except _UsageError as exc:
        print(f"{parser.prog} {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReconstructionError as exc:
        print(f"{parser.prog} {args.verb}: round-trip failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
