"""The relation lattice realizing ~ on period monomials.

Rows are kept in echelon form keyed by their pivot (the smallest interned
symbol index they touch). Insertion follows the classic integer row-echelon
update: subtract when the pivot divides, swap when it is divided, otherwise
replace the pair by an extended-gcd unimodular combination.
"""

import copy
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..errors import LatticeSealedError
from .monomial import PeriodMonomial
from .symbols import PeriodSymbol

logger = logging.getLogger(__name__)

SparseRow = Dict[int, int]


@dataclass(frozen=True)
class Relation:
    """A monomial declared ~ 1, with the rule that produced it."""

    monomial: PeriodMonomial
    tag: str
    axiom: bool = False


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """x, y, g with x·a + y·b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


def _combine(left: SparseRow, right: SparseRow, p: int, q: int) -> SparseRow:
    """p·left + q·right without zero entries."""
    out: SparseRow = {}
    for key in set(left) | set(right):
        value = p * left.get(key, 0) + q * right.get(key, 0)
        if value:
            out[key] = value
    return out


class RelationLattice:
    """Integer span of exponent vectors declared trivial."""

    def __init__(self) -> None:
        self._index: Dict[PeriodSymbol, int] = {}
        self._pivots: Dict[int, SparseRow] = {}
        self.relations: List[Relation] = []
        self._seen: set = set()
        self.sealed = False

    def __len__(self) -> int:
        return len(self.relations)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _intern(self, symbol: PeriodSymbol) -> int:
        if symbol not in self._index:
            self._index[symbol] = len(self._index)
        return self._index[symbol]

    def _vector(self, monomial: PeriodMonomial, intern: bool) -> Optional[SparseRow]:
        """Sparse row for a monomial; None when it touches a never-seen symbol."""
        vec: SparseRow = {}
        for symbol, exp in monomial:
            if symbol not in self._index and not intern:
                return None
            vec[self._intern(symbol)] = exp
        return vec

    def add_relation(self, monomial: PeriodMonomial, tag: str = "", axiom: bool = False) -> "RelationLattice":
        if self.sealed:
            raise LatticeSealedError(f"Cannot add {tag or monomial} to a sealed lattice")
        if monomial in self._seen:
            return self
        self._seen.add(monomial)
        self.relations.append(Relation(monomial, tag, axiom))
        vec = self._vector(monomial, intern=True)
        self._insert(vec)
        logger.debug("Added relation %s: %s", tag, monomial)
        return self

    def add_equivalence(
        self, left: PeriodMonomial, right: PeriodMonomial, tag: str = "", axiom: bool = False
    ) -> "RelationLattice":
        """Declare left ~ right."""
        return self.add_relation(left / right, tag, axiom)

    def _insert(self, vec: SparseRow) -> None:
        while vec:
            j = min(vec)
            row = self._pivots.get(j)
            if row is None:
                self._pivots[j] = vec
                return
            a, b = row[j], vec[j]
            if b % a == 0:
                vec = _combine(vec, row, 1, -(b // a))
            elif a % b == 0:
                self._pivots[j] = vec
                vec = _combine(row, vec, 1, -(a // b))
            else:
                x, y, g = xgcd(a, b)
                self._pivots[j] = _combine(row, vec, x, y)
                vec = _combine(row, vec, -b // g, a // g)

    def _reduce(self, vec: SparseRow) -> SparseRow:
        """Greedy reduction; the remainder is empty iff vec lies in the lattice."""
        stuck: SparseRow = {}
        while vec:
            j = min(vec)
            row = self._pivots.get(j)
            if row is not None:
                vec = _combine(vec, row, 1, -(vec[j] // row[j]))
            if j in vec:
                stuck[j] = vec.pop(j)
        return stuck

    def is_trivial(self, monomial: PeriodMonomial) -> bool:
        vec = self._vector(monomial, intern=False)
        if vec is None:
            return False
        return not self._reduce(vec)

    def equivalent(self, a: PeriodMonomial, b: PeriodMonomial) -> bool:
        return self.is_trivial(a / b)

    def equivalent_power(self, a: PeriodMonomial, b: PeriodMonomial, power: int) -> bool:
        """a^l ~ b^l: equivalence up to an l-th root of a trivial factor."""
        return self.is_trivial((a / b) ** power)

    def residue(self, monomial: PeriodMonomial) -> PeriodMonomial:
        """What is left of a monomial after reducing it by the lattice."""
        vec = self._vector(monomial, intern=False)
        if vec is None:
            unknown = [s for s in monomial.symbols() if s not in self._index]
            known = PeriodMonomial(tuple((s, e) for s, e in monomial if s in self._index))
            return self.residue(known) * PeriodMonomial.of({s: monomial.exponent(s) for s in unknown})
        by_index = {i: s for s, i in self._index.items()}
        return PeriodMonomial.of({by_index[i]: e for i, e in self._reduce(vec).items()})

    def seal(self) -> "RelationLattice":
        self.sealed = True
        return self

    def fork(self) -> "RelationLattice":
        """An unsealed private copy; the original is left untouched."""
        other = RelationLattice()
        other._index = dict(self._index)
        other._pivots = copy.deepcopy(self._pivots)
        other.relations = list(self.relations)
        other._seen = set(self._seen)
        return other


def add_relation(lattice: RelationLattice, monomial: PeriodMonomial, tag: str = "") -> RelationLattice:
    return lattice.add_relation(monomial, tag)


def equivalent(lattice: RelationLattice, a: PeriodMonomial, b: PeriodMonomial) -> bool:
    return lattice.equivalent(a, b)
