"""Batch driver: problem files in, JSON reports out."""

from .main import main
from .report import build_report, load_report, to_jsonable
from .schema import ProblemFile, build_registry, load_problem, parse_problem
from .tasks import OPERATIONS, run_task, run_tasks

__all__ = [
    "OPERATIONS",
    "ProblemFile",
    "build_registry",
    "build_report",
    "load_problem",
    "load_report",
    "main",
    "parse_problem",
    "run_task",
    "run_tasks",
    "to_jsonable",
]
