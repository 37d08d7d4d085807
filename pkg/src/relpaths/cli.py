"""Command-line front end.

Exit codes: 0 success, 1 law failure (counterexample or inconclusive),
2 usage or parse error, 3 precondition violated, 4 internal invariant,
postcondition or step-budget failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from relpaths import edgelist
from relpaths.algebra import point
from relpaths.algorithms import (
    AlgorithmError,
    PreconditionViolated,
    construct_cycle,
    construct_path,
    path_to_sequence,
    topological_sort,
)
from relpaths.predicates import (
    PathClass,
    TerminationKind,
    classify,
    end_points,
    has_termination,
    path_defects,
    start_points,
)
from relpaths.theorems import LAWS, MUTANTS, run_suite
from relpaths.theorems.report import render_machine, render_text
from relpaths.theorems.sweep import DEFAULT_SAMPLES

EXIT_OK, EXIT_LAW, EXIT_USAGE, EXIT_PRE, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        if path == "-":
            return edgelist.parse(sys.stdin.read())
        return edgelist.read(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except edgelist.EdgeListError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _vertex(r) -> str:
    rows = r.row_set()
    return str(rows[0]) if rows else "none"


def cmd_classify(args, out) -> int:
    r = _load(args.file)
    cls = classify(r)
    if cls is PathClass.NOT_A_PATH:
        out.write(f"NotAPath ({', '.join(path_defects(r))})\n")
        return EXIT_OK
    sp, ep = start_points(r), end_points(r)
    line = cls.value
    if sp or ep:
        line += f", start={_vertex(sp)}, end={_vertex(ep)}"
    out.write(line + "\n")
    for kind in TerminationKind:
        verdict = "yes" if has_termination(r, kind) else "no"
        out.write(f"  {kind.value}: {verdict}\n")
    return EXIT_OK


def _check_vertex(v: int, n: int, flag: str) -> None:
    if not 0 <= v < n:
        raise UsageError(f"{flag} {v} outside 0..{n - 1}")


def cmd_run(args, out) -> int:
    r = _load(args.file)
    check = not args.no_check
    try:
        if args.algorithm == "path":
            _check_vertex(args.source, r.n, "--from")
            _check_vertex(args.target, r.n, "--to")
            result, trace = construct_path(r, point(r.n, args.source), point(r.n, args.target), check)
        elif args.algorithm == "topsort":
            result, trace = topological_sort(r, check)
        else:
            result, trace = construct_cycle(r, check)
    except PreconditionViolated as exc:
        _write_trace(args, exc.trace)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRE
    except AlgorithmError as exc:
        _write_trace(args, exc.trace)
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    _write_trace(args, trace)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(edgelist.render_dot(result, args.algorithm))
    out.write(edgelist.render(result))
    out.write("# sequence: " + " ".join(map(str, path_to_sequence(result))) + "\n")
    return EXIT_OK


def _write_trace(args, trace) -> None:
    if args.trace and trace is not None:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(trace.to_json() + "\n")


def cmd_check(args, out) -> int:
    try:
        report = run_suite(
            args.n,
            args.mode,
            args.laws,
            samples=args.samples,
            seed=args.seed,
            workers=args.workers,
            backend=args.backend,
        )
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc).strip("'\"")) from None
    render = render_machine if args.format == "machine" else render_text
    out.write(render(report))
    return EXIT_OK if report.ok else EXIT_LAW


def cmd_laws(args, out) -> int:
    table = dict(LAWS)
    if args.mutants:
        table.update(MUTANTS)
    width = max(len(k) for k in table)
    for law_id, law in table.items():
        names = ", ".join(f"{v.name}:{v.kind}" for v in law.vars)
        out.write(f"{law_id:<{width}}  ({names})  {law.summary}\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="relpaths", description="Relational paths: classify, run algorithms, check laws.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify a relation given as an edge list")
    c.add_argument("file", help="edge-list file, or - for stdin")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("run", help="run one of the relational algorithms")
    r.add_argument("algorithm", choices=["path", "topsort", "cycle"])
    r.add_argument("file", help="edge-list file, or - for stdin")
    r.add_argument("--from", dest="source", type=int, help="start vertex (path only)")
    r.add_argument("--to", dest="target", type=int, help="end vertex (path only)")
    r.add_argument("--trace", metavar="FILE", help="write the run trace as JSON")
    r.add_argument("--dot", metavar="FILE", help="write the result as a DOT graph")
    r.add_argument("--no-check", action="store_true", help="skip assertion checking")
    r.set_defaults(func=cmd_run)

    k = sub.add_parser("check", help="sweep the law catalog over a universe")
    k.add_argument("--n", type=int, required=True, help="vertex count")
    k.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    k.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--laws", help="comma-separated law ids or glob patterns (mut-* for mutants)")
    k.add_argument("--format", choices=["text", "machine"], default="text")
    k.add_argument("--workers", type=int, default=1)
    k.add_argument("--backend", choices=["auto", "scalar", "table", "word"], default="auto")
    k.set_defaults(func=cmd_check)

    lw = sub.add_parser("laws", help="list the law catalog")
    lw.add_argument("--mutants", action="store_true", help="include the mutated laws")
    lw.set_defaults(func=cmd_laws)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "run" and args.algorithm == "path":
            if args.source is None or args.target is None:
                parser.error("run path needs --from and --to")
        if args.command == "check" and args.workers < 1:
            parser.error("--workers must be at least 1")
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
