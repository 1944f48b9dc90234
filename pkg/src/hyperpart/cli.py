"""Command-line front end.

Exit codes: 0 yes or success, 1 no (unsatisfiable, invalid, suite failure),
2 usage or format error, 3 applicability or resource error.
"""

from __future__ import annotations

import argparse
import sys
from itertools import islice
from pathlib import Path

from . import generators
from .classify import DEFAULT_DEPTH, classify
from .core import Bipartition, PiVector, check_partition
from .errors import ApplicabilityError, HyperpartError, ResourceError, UsageError
from .io import read_hypergraph, serialize_hypergraph
from .reductions import (
    doubling,
    from_exact_cover,
    prepend_zero_reduction,
    read_dimacs,
    read_exact_cover,
    reduce_3sat,
    serialize_exact_cover,
    sigma_lift,
    to_exact_cover,
)
from .solvers import solve, solve_all
from .suites import SUITES, run_suite

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_APPLICABILITY = 0, 1, 2, 3
DEFAULT_LIMIT = 10**6

_PI_REDUCTIONS = {"sigma": sigma_lift, "double": doubling, "prepend0": prepend_zero_reduction}
REDUCTION_KINDS = ("sat", *_PI_REDUCTIONS, "xc", "from-xc")


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_classify(args) -> int:
    verdict = classify(PiVector.parse(args.pi), depth=args.depth)
    _out(verdict.report())
    return EXIT_YES


def cmd_solve(args) -> int:
    G = read_hypergraph(args.file)
    pi = PiVector.parse(args.pi)
    if pi.k != G.k:
        raise UsageError(f"pattern {pi} has length {len(pi)}, hypergraph is {G.k}-uniform")
    if not args.all:
        answer = solve(G, pi)
        print(f"method {answer.method}", file=sys.stderr)
        if answer.partition is None:
            return EXIT_NO
        _out(str(answer.partition))
        return EXIT_YES

    if args.limit < 1:
        raise UsageError("--limit must be positive")
    method, solutions = solve_all(G, pi)
    print(f"method {method}", file=sys.stderr)
    found = 0
    for P in islice(solutions, args.limit):
        _out(str(P))
        found += 1
    if found == args.limit and next(solutions, None) is not None:
        _out(f"# truncated after {args.limit} partitions")
    return EXIT_YES if found else EXIT_NO


def cmd_verify(args) -> int:
    G = read_hypergraph(args.file)
    violation = check_partition(G, PiVector.parse(args.pi), Bipartition.from_string(args.partition))
    if violation is None:
        _out("VALID")
        return EXIT_YES
    _out(str(violation))
    return EXIT_NO


def cmd_reduce(args) -> int:
    kind = args.kind
    needs_pi = kind in _PI_REDUCTIONS
    if needs_pi and args.pi is None:
        raise UsageError(f"reduce {kind} needs a pattern argument")
    if not needs_pi and args.pi is not None:
        raise UsageError(f"reduce {kind} takes no pattern argument")

    if kind == "sat":
        rec = reduce_3sat(read_dimacs(args.input))
    elif kind == "xc":
        rec = to_exact_cover(read_hypergraph(args.input))
    elif kind == "from-xc":
        rec = from_exact_cover(read_exact_cover(args.input))
    else:
        rec = _PI_REDUCTIONS[kind](read_hypergraph(args.input), PiVector.parse(args.pi))

    text = serialize_exact_cover(rec.output) if kind == "xc" else serialize_hypergraph(rec.output)
    out = Path(args.output)
    out.write_text(text)
    Path(f"{out}.map").write_text(rec.map_lines())
    if rec.output_pi is not None:
        _out(f"pi {rec.output_pi}")
    return EXIT_YES


def cmd_generate(args) -> int:
    if args.kind == "cycle":
        G = generators.cycle(args.n, args.k)
    elif args.kind == "random":
        G = generators.random_hypergraph(args.n, args.k, args.p, seed=args.seed)
    else:
        G = generators.generate(args.kind, args.n, args.k)
    text = serialize_hypergraph(G)
    if args.output:
        Path(args.output).write_text(text)
    else:
        _out(text)
    return EXIT_YES


def cmd_oracle_check(args) -> int:
    rep = run_suite(args.suite, seed=args.seed, count=args.count, max_n=args.max_n)
    for line in rep.failures:
        _out(f"counterexample {line}")
    _out(rep.summary())
    return EXIT_YES if rep.passed else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperpart", description="pi-partition problems on k-uniform hypergraphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="complexity verdict for a pattern")
    p.add_argument("pi")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="derivation search depth")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="find one or all pi-partitions")
    p.add_argument("file")
    p.add_argument("pi")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="print every partition")
    mode.add_argument("--first", action="store_true", help="print one partition (default)")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="cap on lines printed by --all")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a partition string")
    p.add_argument("file")
    p.add_argument("pi")
    p.add_argument("partition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build a reduced instance plus a .map record")
    p.add_argument("kind", choices=REDUCTION_KINDS)
    p.add_argument("input")
    p.add_argument("pi", nargs="?")
    p.add_argument("-o", "--output", required=True, help="output instance path; the record goes to <path>.map")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", help="write a hypergraph from a named family")
    p.add_argument("kind", choices=("cycle", "complete", "empty", "random"))
    p.add_argument("n", type=int, help="vertex count (m for cycle)")
    p.add_argument("k", type=int)
    p.add_argument("--p", type=float, default=0.5, help="edge probability for random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle-check", help="run a seeded oracle-equivalence suite")
    p.add_argument("suite", choices=tuple(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    try:
        return args.func(args)
    except (ApplicabilityError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_APPLICABILITY
    except (HyperpartError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
