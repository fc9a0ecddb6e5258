"""Command-line entry point: ``hfree <verb> --flag value ...``.

Exit status is 0 on success, 1 on a failed verification or a solver
capacity error, and 2 on usage or input errors. Errors go to stderr as
lines prefixed ``error:``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .io import GraphFormatError, format_instance, read_graph, read_instance
from .patterns import classify
from .planner import PlanError, StepError, apply_plan, parse_plan, plan
from .solver import SolverCapacityError, format_solution, solve_branching
from .verify import (
    Random,
    named_steps,
    verify_step_equivalence,
)

SUITE_DEFAULTS = {"regular-carve": (4, 1)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hfree", description="H-free Edge Deletion reduction toolkit")
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = verbs.add_parser("classify", help="print the class of a forbidden graph")
    p.add_argument("--pattern", required=True)

    p = verbs.add_parser("plan", help="print the reduction chain for a forbidden graph")
    p.add_argument("--pattern", required=True)
    p.add_argument("--out")

    p = verbs.add_parser("reduce", help="apply a plan to a base-problem instance")
    p.add_argument("--plan", required=True)
    p.add_argument("--instance", required=True)
    p.add_argument("--out")

    p = verbs.add_parser("solve", help="decide an instance exactly")
    p.add_argument("--instance", required=True)
    p.add_argument("--pattern", required=True)

    suites = sorted(named_steps())
    p = verbs.add_parser("verify", help="exhaustive equivalence check of a named step")
    p.add_argument("--suite", required=True, choices=suites)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)

    p = verbs.add_parser("fuzz", help="random-mode equivalence check of a named step")
    p.add_argument("--suite", required=True, choices=suites)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _limits(args) -> tuple[int, int]:
    n, k = SUITE_DEFAULTS.get(args.suite, (5, 2))
    n = args.n if args.n is not None else n
    k = args.k if args.k is not None else k
    if n < 1 or k < 1:
        raise UsageError("--n and --k must be positive")
    return n, k


def _run(args) -> int:
    if args.verb == "classify":
        print(classify(read_graph(args.pattern)).format())
    elif args.verb == "plan":
        _emit(plan(read_graph(args.pattern)).format(), args.out)
    elif args.verb == "reduce":
        p = parse_plan(Path(args.plan).read_text())
        _emit(format_instance(apply_plan(p, read_instance(args.instance))), args.out)
    elif args.verb == "solve":
        print(format_solution(solve_branching(read_instance(args.instance), read_graph(args.pattern))))
    else:
        n, k = _limits(args)
        mode = "exhaustive" if args.verb == "verify" else Random(args.count, args.seed)
        report = verify_step_equivalence(named_steps()[args.suite], n, k, mode)
        sys.stdout.write(report.format())
        return 0 if report.passed else 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return _run(build_parser().parse_args(argv))
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, PlanError, StepError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SolverCapacityError as exc:
        print(f"error: capacity: {exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
