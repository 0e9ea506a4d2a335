"""Seeded random instances for the end-to-end derivations."""

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ..core.embeddings import EmbeddingSet
from ..core.halfint import HalfInt
from ..core.types import InfinityType
from ..critical.sets import critical_set_pair
from ..errors import (
    BoundExceededError,
    CollisionError,
    MiddleClassError,
    NonCriticalError,
    PlacementError,
    RegularityError,
)
from ..periods.registry import Representation
from ..theorems.central_values import derive_central_value
from ..theorems.conjecture import deligne_compatibility_check
from ..theorems.critical_values import derive_critical_value
from ..theorems.models import MISMATCH, FormulaReport

logger = logging.getLogger(__name__)

# Instances the generators cannot rule out cheaply; they are redrawn.
SKIPPED = (NonCriticalError, PlacementError, RegularityError, CollisionError, MiddleClassError, BoundExceededError)
MAX_REDRAWS = 5


@dataclass
class SweepOutcome:
    name: str
    cases: int = 0
    passed: int = 0
    skipped: int = 0
    failures: List[Dict[str, str]] = field(default_factory=list)
    # parity case letter -> instances run
    by_case: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "skipped": self.skipped,
            "failures": self.failures,
            "by_case": dict(sorted(self.by_case.items())),
        }


def random_embeddings(rng: random.Random, max_d: int = 2) -> EmbeddingSet:
    d = rng.randint(1, max_d)
    return EmbeddingSet.create([f"s{i}" for i in range(1, d + 1)], name="F")


def _spread(rng: random.Random, count: int, parity: int, low_gap: int, high_gap: int) -> List[int]:
    """Increasing doubled values of one parity with gaps drawn from [low_gap, high_gap]."""
    value = 2 * rng.randint(-4, 4) + parity
    values = [value]
    for _ in range(count - 1):
        value += 2 * rng.randint(low_gap, high_gap)
        values.append(value)
    shift = 2 * (values[len(values) // 2] // 2)
    return [v - shift for v in values]


def _infinity(embeddings: EmbeddingSet, doubled: Dict[str, List[int]]) -> InfinityType:
    rows = {label: sorted((HalfInt(v) for v in values), reverse=True) for label, values in doubled.items()}
    return InfinityType.create(embeddings, rows, 0)


def good_position_pair(
    rng: random.Random, embeddings: EmbeddingSet, n: int, n_other: int
) -> Tuple[InfinityType, InfinityType]:
    """Weight-0 pair with one reflected exponent of the second in each of n' inner gaps of the first."""
    rows: Dict[str, List[int]] = {}
    other_rows: Dict[str, List[int]] = {}
    for label in embeddings.labels:
        values = _spread(rng, n, (n - 1) % 2, 6, 9)
        gaps = sorted(rng.sample(range(n - 1), n_other))
        points = []
        for g in gaps:
            middle = (values[g] + values[g + 1]) // 2
            if (middle - (n_other - 1)) % 2:
                middle += 1
            points.append(middle + rng.choice((-2, 0, 2)))
        rows[label] = values
        other_rows[label] = [-p for p in points]
    return _infinity(embeddings, rows), _infinity(embeddings, other_rows)


def very_regular_pair(
    rng: random.Random, embeddings: EmbeddingSet, r1: int, r2: int
) -> Tuple[InfinityType, InfinityType]:
    """Weight-0 pair whose exponents (the second's conjugated) sit on widely separated slots."""
    rows: Dict[str, List[int]] = {}
    other_rows: Dict[str, List[int]] = {}
    for label in embeddings.labels:
        slots = list(range(r1 + r2))
        rng.shuffle(slots)
        centre = r1 + r2
        first = [16 * k - 8 * centre for k in sorted(slots[:r1])]
        second = [16 * k - 8 * centre for k in sorted(slots[r1:])]
        rows[label] = [v + (r1 - 1) % 2 for v in first]
        other_rows[label] = [-(v + (r2 - 1) % 2) for v in second]
    return _infinity(embeddings, rows), _infinity(embeddings, other_rows)


def regular_pair(
    rng: random.Random, embeddings: EmbeddingSet, n: int, n_other: int
) -> Tuple[InfinityType, InfinityType]:
    rows = {label: _spread(rng, n, (n - 1) % 2, 2, 5) for label in embeddings.labels}
    other_rows = {label: _spread(rng, n_other, (n_other - 1) % 2, 2, 5) for label in embeddings.labels}
    return _infinity(embeddings, rows), _infinity(embeddings, other_rows)


def _sweep(
    name: str, seed: int, cases: int, draw: Callable[[random.Random, int], Optional[FormulaReport]]
) -> SweepOutcome:
    rng = random.Random(seed)
    outcome = SweepOutcome(name)
    attempts = 0
    while outcome.cases < cases and attempts < cases * MAX_REDRAWS:
        attempts += 1
        try:
            report = draw(rng, attempts)
        except SKIPPED as err:
            outcome.skipped += 1
            logger.debug("%s: redrawing after %s", name, err)
            continue
        if report is None:
            outcome.skipped += 1
            continue
        outcome.cases += 1
        letter = report.outputs.get("case")
        if letter is not None:
            outcome.by_case[letter] = outcome.by_case.get(letter, 0) + 1
        if report.ok:
            outcome.passed += 1
        else:
            outcome.failures.append({"report": report.name, "witness": str(report.witness)})
    logger.info("%s: %d/%d passed, %d redrawn", name, outcome.passed, outcome.cases, outcome.skipped)
    return outcome


def sweep_critical_value(seed: int, cases: int, max_n: int = 6) -> SweepOutcome:
    def draw(rng: random.Random, attempt: int) -> FormulaReport:
        embeddings = random_embeddings(rng)
        n = rng.randint(2, max_n)
        n_other = rng.randint(1, n - 1)
        pi, other = good_position_pair(rng, embeddings, n, n_other)
        return derive_critical_value(
            Representation(f"Pi{attempt}", pi), Representation(f"Pi'{attempt}", other), rng.choice((1, 2))
        )

    return _sweep("sweep_critical_value", seed, cases, draw)


def sweep_central_value(seed: int, cases: int, max_rank: int = 4) -> SweepOutcome:
    def draw(rng: random.Random, attempt: int) -> FormulaReport:
        embeddings = random_embeddings(rng)
        r1, r2 = rng.randint(1, max_rank), rng.randint(1, max_rank)
        if r1 % 2 and r2 % 2 == 0:
            r1, r2 = r2, r1
        first, second = very_regular_pair(rng, embeddings, r1, r2)
        return derive_central_value(Representation(f"Pi1_{attempt}", first), Representation(f"Pi2_{attempt}", second))

    return _sweep("sweep_central_value", seed, cases, draw)


def sweep_deligne(seed: int, cases: int, max_n: int = 4, perturb: bool = True) -> SweepOutcome:
    """Deligne compatibility on random regular pairs; perturbed runs must mismatch."""

    def draw(rng: random.Random, attempt: int) -> Optional[FormulaReport]:
        embeddings = random_embeddings(rng)
        pi_inf, other_inf = regular_pair(rng, embeddings, rng.randint(1, max_n), rng.randint(1, max_n))
        critical = critical_set_pair(pi_inf, other_inf)
        if critical.is_empty or critical.lower is None or critical.upper is None:
            return None
        m = rng.choice(critical.members())
        pi, other = Representation(f"Pi{attempt}", pi_inf), Representation(f"Pi'{attempt}", other_inf)
        report = deligne_compatibility_check(pi, other, m)
        if perturb and report.ok:
            place = rng.choice(embeddings.labels)
            j = rng.randint(0, pi.n)
            perturbed = deligne_compatibility_check(pi, other, m, perturb=(place, j, rng.choice((-1, 1))))
            report.check("perturbation_detected", perturbed.verdict == MISMATCH and perturbed.witness is not None)
        return report

    return _sweep("sweep_deligne", seed, cases, draw)
