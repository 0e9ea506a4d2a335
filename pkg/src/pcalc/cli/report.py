"""Canonical JSON for task outputs and the run report."""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from .. import __version__
from ..core.halfint import HalfInt
from ..core.types import CharacterType, InfinityType
from ..critical.sets import CriticalSet, HodgeTypeList
from ..hodge.weights import HighestWeight, WOneElement
from ..indices.signs import SignMap
from ..indices.split import SplitIndexVector
from ..periods.lattice import Relation
from ..periods.monomial import PeriodMonomial
from ..theorems.models import FormulaReport

logger = logging.getLogger(__name__)

PASSED = "passed"
FAILED = "failed"


def monomial_json(monomial: PeriodMonomial) -> Dict[str, Any]:
    return {"terms": monomial.to_json(), "text": str(monomial)}


def to_jsonable(value: Any) -> Any:
    """Engine values as plain JSON with a stable key order."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, HalfInt):
        return str(value)
    if isinstance(value, PeriodMonomial):
        return monomial_json(value)
    if isinstance(value, Relation):
        return {"tag": value.tag, "axiom": value.axiom, "monomial": monomial_json(value.monomial)}
    if isinstance(value, FormulaReport):
        return value.to_json()
    if isinstance(value, SplitIndexVector):
        return list(value.entries)
    if isinstance(value, SignMap):
        return value.as_dict()
    if isinstance(value, CriticalSet):
        return {
            "empty": value.is_empty,
            "offset": str(value.offset),
            "lower": None if value.lower is None else str(value.lower),
            "upper": None if value.upper is None else str(value.upper),
            "text": value.describe(),
        }
    if isinstance(value, HodgeTypeList):
        return {"weight": str(value.weight), "ps": [str(p) for p in value.ps]}
    if isinstance(value, InfinityType):
        return {
            "key": value.key(),
            "weight": str(value.weight),
            "exponents": {label: [str(x) for x in value.at(label)] for label in value.embeddings.labels},
        }
    if isinstance(value, CharacterType):
        return {
            "key": value.key(),
            "a": {label: str(value.at(label)[0]) for label in value.embeddings.labels},
            "b": {label: str(value.at(label)[1]) for label in value.embeddings.labels},
        }
    if isinstance(value, WOneElement):
        return {label: list(value.at(label)) for label in value.embeddings.labels}
    if isinstance(value, HighestWeight):
        return {"lambda0": value.lambda0, "rows": {label: list(value.at(label)) for label in value.embeddings.labels}}
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(item) for item in value]
        return sorted(items, key=json.dumps) if isinstance(value, (set, frozenset)) else items
    raise TypeError(f"No JSON form for {type(value).__name__}")


@dataclass
class TaskResult:
    index: int
    op: str
    name: str
    inputs: Dict[str, Any]
    outputs: Dict[str, Any] = field(default_factory=dict)
    status: str = PASSED
    verdict: Optional[str] = None
    error: Optional[str] = None
    expected: Optional[Any] = None
    mismatch: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.status == PASSED

    def fail(self, reason: str) -> None:
        self.status = FAILED
        if self.error is None:
            self.error = reason
        logger.info("Task %s failed: %s", self.name, reason)

    def to_json(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "op": self.op,
            "name": self.name,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "status": self.status,
            "verdict": self.verdict,
            "error": self.error,
            "expected": self.expected,
            "mismatch": self.mismatch,
        }


def build_report(source: str, results: List[TaskResult], flags: Dict[str, Any]) -> Dict[str, Any]:
    failed = [result.name for result in results if not result.passed]
    return {
        "pcalc": __version__,
        "source": source,
        "flags": flags,
        "summary": {"tasks": len(results), "passed": len(results) - len(failed), "failed": failed},
        "tasks": [result.to_json() for result in results],
    }


def dumps(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_report(report: Dict[str, Any], path: Optional[Path]) -> str:
    """Write to ``path`` when given; the text is returned either way."""
    text = dumps(report)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
        logger.info("Report written to %s", path)
    return text


def load_report(path: Path) -> Dict[str, Any]:
    return json.loads(Path(path).read_text(encoding="utf-8"))
