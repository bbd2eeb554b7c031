"""Command-line driver.

Exit codes: 0 at least one world view (or a successful auxiliary command),
1 no world views / corpus failures, 2 parse, validation or usage errors,
3 search cap exceeded, 4 oracle cross-check mismatch.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .epistemic import Semantics, emit_reduct_framework
from .errors import (
    ElpSyntaxError,
    NameCollisionError,
    OracleMismatchError,
    ResourceLimitError,
    UnsafeRuleError,
)
from .ground import ground_program
from .output import format_json, format_text
from .search import SolveOptions, Strategy, solve
from .syntax import normalize, parse_program, validate

EXIT_FOUND, EXIT_NONE, EXIT_USAGE, EXIT_RESOURCE, EXIT_ORACLE = 0, 1, 2, 3, 4

SUBCOMMANDS = ("solve", "corpus", "bench")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _solve_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="worldview", description="Compute world views of an epistemic logic program.")
    p.add_argument("file", help="program file, or - for standard input")
    p.add_argument("--semantics", choices=[s.value for s in Semantics], default="es2016")
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="maximal-first")
    p.add_argument("--max-wv", type=_non_negative, default=0, metavar="N", help="stop after N world views (0 = all)")
    p.add_argument("--workers", type=_positive, default=1, metavar="N")
    p.add_argument("--group-size", type=_positive, default=16, metavar="N")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-guess-filter", action="store_true")
    p.add_argument("--no-consequence-pruning", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check against the unoptimized pipeline")
    p.add_argument("--emit-framework", metavar="PATH", help="write the reduct framework and exit")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _err(msg: str) -> None:
    print(f"worldview: {msg}", file=sys.stderr)


def cmd_solve(argv: List[str]) -> int:
    args = _solve_parser().parse_args(argv)
    sem = Semantics(args.semantics)
    try:
        text = _read(args.file)
    except OSError as exc:
        _err(str(exc))
        return EXIT_USAGE
    where = "<stdin>" if args.file == "-" else args.file
    try:
        program = parse_program(text, check=False)
    except ElpSyntaxError as exc:
        _err(f"{where}:{exc}")
        return EXIT_USAGE
    problems = validate(program)
    if problems:
        for d in problems:
            _err(f"{where}:{d}")
        return EXIT_USAGE
    try:
        g = ground_program(normalize(program))
        for w in g.warnings:
            _err(f"warning: {w}")
        if args.emit_framework:
            framework = emit_reduct_framework(g, sem)
            if args.emit_framework == "-":
                sys.stdout.write(framework)
            else:
                Path(args.emit_framework).write_text(framework, encoding="utf-8")
            return EXIT_FOUND
        options = SolveOptions(
            strategy=Strategy(args.strategy),
            max_world_views=args.max_wv,
            workers=args.workers,
            group_size=args.group_size,
            guess_filter=not args.no_guess_filter,
            consequence_pruning=not args.no_consequence_pruning,
            oracle_check=args.oracle,
        )
        report = solve(g, sem, options)
    except (UnsafeRuleError, NameCollisionError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ResourceLimitError as exc:
        _err(str(exc))
        return EXIT_RESOURCE
    except OracleMismatchError as exc:
        _err(str(exc))
        return EXIT_ORACLE
    out = format_json(report) if args.format == "json" else format_text(report)
    sys.stdout.write(out)
    return EXIT_FOUND if report.count else EXIT_NONE


def cmd_corpus(argv: List[str]) -> int:
    from .bench import run_golden_corpus

    p = argparse.ArgumentParser(prog="worldview corpus", description="Run the golden corpus.")
    p.add_argument("directory", nargs="?", help="corpus directory (default: bundled corpus)")
    p.add_argument("--workers", type=_positive, default=1)
    args = p.parse_args(argv)
    results = run_golden_corpus(args.directory, SolveOptions(workers=args.workers))
    for r in results:
        print(r.describe())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} cases passed")
    return EXIT_NONE if failed else EXIT_FOUND


def cmd_bench(argv: List[str]) -> int:
    from .bench import scaling_report

    p = argparse.ArgumentParser(prog="worldview bench", description="Scaling run on generated eligibility programs.")
    p.add_argument("--max-n", type=_positive, default=3, help="largest applicant count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--semantics", choices=[s.value for s in Semantics], default="es2016")
    p.add_argument("--out", default="bench-out", help="output directory for CSV and figure")
    args = p.parse_args(argv)
    csv_path, fig_path = scaling_report(args.max_n, args.out, args.seed, Semantics(args.semantics))
    print(csv_path)
    print(fig_path)
    return EXIT_FOUND


def run(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    command = cmd_solve
    if argv and argv[0] in SUBCOMMANDS:
        command = {"solve": cmd_solve, "corpus": cmd_corpus, "bench": cmd_bench}[argv.pop(0)]
    try:
        return command(argv)
    except SystemExit as exc:  # argparse
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
