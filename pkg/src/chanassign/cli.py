"""Command-line front end.

Exit status is 0 whenever a command ran, whatever the yes/no answer; 1 for
usage errors (including unreadable files), 2 for malformed input files and 3
when an ``--oracle`` run exceeds its candidate budget.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .counting import count_assignments
from .decision import decide_span, min_span
from .finding import find_assignment
from .instance import (Instance, ParseError, format_assignment, lpq_reduce, parse_graph,
                       parse_instance, serialize_instance)
from .oracle import BudgetExceeded, brute_count, brute_decide, brute_min_span

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class RunReport:
    command: str
    n: int
    ell: int
    s: int | None
    answer: object
    elapsed_ms: float
    instance_text: str | None = None

    def to_json(self) -> str:
        record = {"command": self.command, "n": self.n, "ell": self.ell, "s": self.s,
                  "answer": self.answer, "elapsed_ms": round(self.elapsed_ms, 3)}
        if self.instance_text is not None:
            record["instance"] = self.instance_text
        return json.dumps(record)

    def to_text(self) -> str:
        out = self.instance_text or ""
        a = self.answer
        if self.command == "find":
            return out + _assignment_text(a, self.s)
        if isinstance(a, bool):
            return out + ("yes\n" if a else "no\n")
        return out + f"{a}\n"


def _assignment_text(channels, s) -> str:
    if channels is None:
        return format_assignment(None)
    return "".join(f"v {v} {c}\n" for v, c in enumerate(channels))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chanassign",
                     description="Exact channel assignment by inclusion-exclusion "
                                 "and the fast zeta transform.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, oracle=True, threads=True):
        if oracle:
            p.add_argument("--oracle", action="store_true",
                           help="use the brute-force reference solver")
        if threads:
            p.add_argument("--threads", type=_positive, default=1, metavar="T",
                           help="worker processes for the inclusion-exclusion sum")
        p.add_argument("--json", action="store_true", help="print one JSON record")
        p.add_argument("file")

    p = sub.add_parser("decide", help="is there a proper assignment of span <= S?")
    p.add_argument("--span", type=_positive, required=True, metavar="S")
    common(p)
    p = sub.add_parser("count", help="number of proper assignments of span <= S")
    p.add_argument("--span", type=_positive, required=True, metavar="S")
    common(p)
    p = sub.add_parser("minspan", help="minimum span")
    common(p)
    p = sub.add_parser("find", help="lexicographically smallest assignment of span <= S")
    p.add_argument("--span", type=_positive, required=True, metavar="S")
    common(p, oracle=False, threads=False)
    p = sub.add_parser("lpq", help="L(p,q)-labelling of a graph file")
    p.add_argument("--p", type=_nonnegative, required=True, dest="p")
    p.add_argument("--q", type=_nonnegative, required=True, dest="q")
    goal = p.add_mutually_exclusive_group(required=True)
    goal.add_argument("--span", type=_positive, metavar="S")
    goal.add_argument("--minspan", action="store_true")
    p.add_argument("--emit-instance", action="store_true",
                   help="also print the reduced channel assignment instance")
    common(p, oracle=False, threads=False)
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def execute(args) -> RunReport:
    text = _read(args.file)
    start = time.perf_counter()
    emitted = None
    if args.command == "lpq":
        inst = lpq_reduce(parse_graph(text), args.p, args.q)
        if args.emit_instance:
            emitted = serialize_instance(inst)
        s = args.span
        answer = decide_span(inst, s) if s is not None else min_span(inst)
    else:
        inst = parse_instance(text)
        s = getattr(args, "span", None)
        answer = _solve(args.command, inst, s, getattr(args, "oracle", False),
                        getattr(args, "threads", 1))
    elapsed = (time.perf_counter() - start) * 1000
    return RunReport(args.command, inst.n, inst.ell, s, answer, elapsed, emitted)


def _solve(command: str, inst: Instance, s, oracle: bool, threads: int):
    if command == "decide":
        return brute_decide(inst, s) if oracle else decide_span(inst, s, n_jobs=threads)
    if command == "count":
        return str(brute_count(inst, s) if oracle else count_assignments(inst, s, n_jobs=threads))
    if command == "minspan":
        return brute_min_span(inst) if oracle else min_span(inst, n_jobs=threads)
    if command == "find":
        a = find_assignment(inst, s)
        return None if a is None else list(a.channels)
    raise UsageError(f"unknown command {command!r}")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        report = execute(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"oracle budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
