"""`pcalc run <file>`: execute the tasks of a problem file and write a JSON report."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from ..config import Settings, get_settings
from ..errors import ProblemFileError
from .report import build_report, write_report
from .schema import build_registry, load_problem
from .tasks import failed, known_operations, run_tasks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_TASK_FAILED = 1
EXIT_BAD_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcalc", description="Symbolic calculus for arithmetic automorphic periods.")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run every task of a problem file.")
    run.add_argument("file", type=Path, help="Problem file (JSON).")
    run.add_argument("--verify", action="store_true", help="Fail on any mismatch verdict.")
    run.add_argument("--seed", type=int, default=None, help="Seed for the randomized sweeps.")
    run.add_argument("--cases", type=int, default=None, help="Number of cases per sweep.")
    run.add_argument("--parallel", action="store_true", help="Run tasks concurrently; report order is unchanged.")
    run.add_argument("--report", type=Path, default=None, help="Write the report here instead of stdout.")
    run.add_argument("--log-level", default=None, help="Overrides PCALC_LOG_LEVEL.")

    commands.add_parser("ops", help="List the task operations.")
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def run(args: argparse.Namespace, settings: Settings) -> int:
    try:
        problem = load_problem(args.file)
        registry = build_registry(problem)
        results = run_tasks(problem, registry, settings, verify=args.verify, parallel=args.parallel)
    except ProblemFileError as err:
        logger.error("Invalid problem file: %s", err)
        print(f"pcalc: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT

    flags = {"verify": args.verify, "seed": settings.seed, "cases": settings.cases}
    report = build_report(str(args.file), results, flags)
    text = write_report(report, args.report)
    if args.report is None:
        sys.stdout.write(text)

    failures = failed(results)
    for result in failures:
        print(f"pcalc: task {result.name} failed: {result.error}", file=sys.stderr)
    logger.info("%d tasks, %d failed", len(results), len(failures))
    return EXIT_TASK_FAILED if failures else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    if args.command == "ops":
        configure_logging(settings.log_level)
        print("\n".join(known_operations()))
        return EXIT_OK

    settings = settings.override(log_level=args.log_level, seed=args.seed, cases=args.cases)
    configure_logging(settings.log_level)
    return run(args, settings)
