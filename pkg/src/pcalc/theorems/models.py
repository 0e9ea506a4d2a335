"""Report and motive records shared by the derivation pipelines."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.embeddings import EmbeddingSet
from ..core.halfint import HalfInt, HalfIntLike
from ..critical.sets import motive_hodge_data
from ..errors import ValidationError
from ..periods.lattice import RelationLattice
from ..periods.monomial import PeriodMonomial
from ..periods.registry import Representation

logger = logging.getLogger(__name__)

EQUIVALENT = "equivalent"
MISMATCH = "mismatch"


@dataclass(frozen=True)
class MotiveHodgeData:
    """Hodge numbers p_1(σ) > … > p_n(σ) of a rank-n motive of weight ω."""

    id: str
    embeddings: EmbeddingSet
    weight: HalfInt
    rows: Tuple[Tuple[HalfInt, ...], ...]
    central: Optional[str] = None

    @classmethod
    def create(
        cls,
        motive_id: str,
        embeddings: EmbeddingSet,
        rows: Mapping[str, Sequence[HalfIntLike]],
        weight: HalfIntLike,
        central: Optional[str] = None,
    ) -> "MotiveHodgeData":
        ordered = []
        for label in embeddings.labels:
            if label not in rows:
                raise ValidationError(f"Motive {motive_id} misses place {label!r}")
            row = tuple(HalfInt.of(p) for p in rows[label])
            if any(not left > right for left, right in zip(row, row[1:])):
                raise ValidationError(f"Hodge numbers of {motive_id} at {label} are not strictly decreasing")
            ordered.append(row)
        if len({len(row) for row in ordered}) != 1:
            raise ValidationError(f"Motive {motive_id} has rows of different lengths")
        return cls(motive_id, embeddings, HalfInt.of(weight), tuple(ordered), central)

    @classmethod
    def from_representation(cls, rep: Representation) -> "MotiveHodgeData":
        """The motive attached to Π through the automorphic-to-motivic dictionary."""
        hodge = motive_hodge_data(rep.infinity)
        first = next(iter(hodge.values()))
        return cls.create(
            f"M({rep.id})",
            rep.infinity.embeddings,
            {label: data.ps for label, data in hodge.items()},
            first.weight,
            rep.central,
        )

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def at(self, place: str) -> Tuple[HalfInt, ...]:
        """p_i at an upper place; at σ̄ the conjugate list ω − p_{n+1−i}(σ)."""
        if self.embeddings.is_upper(place):
            return self.rows[self.embeddings.index(place)]
        row = self.rows[self.embeddings.index(self.embeddings.conj(place))]
        return tuple(self.weight - p for p in reversed(row))

    def conjugate_row(self, place: str) -> Tuple[HalfInt, ...]:
        return self.at(self.embeddings.conj(place))

    def conjugate(self) -> "MotiveHodgeData":
        rows = tuple(self.conjugate_row(label) for label in self.embeddings.labels)
        return MotiveHodgeData(f"{self.id}^c", self.embeddings, self.weight, rows, self.central)


@dataclass
class FormulaReport:
    """Outcome of one symbolic identity check."""

    name: str
    lhs: Optional[PeriodMonomial] = None
    rhs: Optional[PeriodMonomial] = None
    verdict: str = EQUIVALENT
    witness: Optional[PeriodMonomial] = None
    provenance: List[str] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    outputs: Dict[str, Any] = field(default_factory=dict)
    subreports: List["FormulaReport"] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.verdict == EQUIVALENT
            and all(self.checks.values())
            and all(sub.ok for sub in self.subreports)
        )

    def check(self, name: str, value: bool) -> bool:
        self.checks[name] = bool(value)
        if not value:
            logger.info("%s: check %s failed", self.name, name)
        return bool(value)

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def compare(self, lattice: RelationLattice, lhs: PeriodMonomial, rhs: PeriodMonomial) -> bool:
        """Set lhs, rhs and the verdict; the witness is what the lattice cannot reduce."""
        self.lhs, self.rhs = lhs, rhs
        self.provenance = provenance_of(lattice)
        if lattice.equivalent(lhs, rhs):
            self.verdict, self.witness = EQUIVALENT, None
            return True
        self.verdict = MISMATCH
        self.witness = lattice.residue(lhs / rhs)
        logger.info("%s: mismatch, residue %s", self.name, self.witness)
        return False

    def settle(self) -> "FormulaReport":
        """Verdict for reports made only of named checks."""
        if self.lhs is None and self.rhs is None:
            self.verdict = EQUIVALENT if all(self.checks.values()) else MISMATCH
        return self

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "ok": self.ok,
            "lhs": None if self.lhs is None else self.lhs.to_json(),
            "rhs": None if self.rhs is None else self.rhs.to_json(),
            "lhs_text": None if self.lhs is None else str(self.lhs),
            "rhs_text": None if self.rhs is None else str(self.rhs),
            "witness": None if self.witness is None else self.witness.to_json(),
            "witness_text": None if self.witness is None else str(self.witness),
            "provenance": list(self.provenance),
            "checks": dict(sorted(self.checks.items())),
            "notes": list(self.notes),
            "outputs": self.outputs,
            "subreports": [sub.to_json() for sub in self.subreports],
        }


def provenance_of(lattice: RelationLattice) -> List[str]:
    """Distinct rule names behind the relations of a lattice, in insertion order."""
    seen: Dict[str, None] = {}
    for relation in lattice.relations:
        rule = relation.tag.split("[", 1)[0] or "untagged"
        if relation.axiom:
            rule += " (axiom)"
        seen.setdefault(rule, None)
    return list(seen)
