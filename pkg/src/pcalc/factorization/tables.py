"""Exchange condition and factorization of product tables modulo a relation lattice."""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..errors import AnchorError, ExchangeFailure, ValidationError
from ..periods.lattice import RelationLattice
from ..periods.monomial import PeriodMonomial

logger = logging.getLogger(__name__)

Point = Tuple[Hashable, ...]


@dataclass(frozen=True)
class ProductTable:
    """A total map X_1 × … × X_d → monomials."""

    axes: Tuple[Tuple[Hashable, ...], ...]
    values: Tuple[Tuple[Point, PeriodMonomial], ...]

    @classmethod
    def create(
        cls, axes: Sequence[Sequence[Hashable]], values: Mapping[Point, PeriodMonomial]
    ) -> "ProductTable":
        axes_t = tuple(tuple(axis) for axis in axes)
        if any(not axis for axis in axes_t):
            raise ValidationError("Product table axes must be nonempty")
        missing = [p for p in itertools.product(*axes_t) if p not in values]
        if missing:
            raise ValidationError(f"Product table is not total; missing {missing[:3]}")
        ordered = tuple((p, values[p]) for p in itertools.product(*axes_t))
        return cls(axes=axes_t, values=ordered)

    @property
    def d(self) -> int:
        return len(self.axes)

    def __getitem__(self, point: Point) -> PeriodMonomial:
        return self.as_dict()[tuple(point)]

    def as_dict(self) -> Dict[Point, PeriodMonomial]:
        return dict(self.values)

    def points(self) -> Iterator[Point]:
        return itertools.product(*self.axes)


def _swap(x: Point, y: Point, k: int) -> Tuple[Point, Point]:
    return x[:k] + (y[k],) + x[k + 1:], y[:k] + (x[k],) + y[k + 1:]


def exchange_witness(
    table: ProductTable, lattice: RelationLattice
) -> Optional[Tuple[Point, Point, int]]:
    """First (x, x', k) violating f(x)f(x') ~ f(x with x'_k)f(x' with x_k), if any."""
    values = table.as_dict()
    points = list(table.points())
    reduced = all(len(axis) >= 3 for axis in table.axes)
    for x, y in itertools.combinations(points, 2):
        # with at least three values per axis, pairs differing everywhere suffice
        if reduced and any(a == b for a, b in zip(x, y)):
            continue
        for k in range(table.d):
            if x[k] == y[k]:
                continue
            u, v = _swap(x, y, k)
            if not lattice.equivalent(values[x] * values[y], values[u] * values[v]):
                return x, y, k
    return None


def exchange_condition(table: ProductTable, lattice: RelationLattice) -> bool:
    return exchange_witness(table, lattice) is None


@dataclass(frozen=True)
class Factorization:
    factors: Tuple[Dict[Hashable, PeriodMonomial], ...]

    def evaluate(self, point: Point) -> PeriodMonomial:
        return PeriodMonomial.product(f[x] for f, x in zip(self.factors, point))


def factorize(
    table: ProductTable,
    lattice: RelationLattice,
    anchors: Sequence[Tuple[Hashable, PeriodMonomial]],
) -> Factorization:
    """The unique f_k with Π_k f_k(x_k) ~ f(x) and f_k(a_k) ~ c_k."""
    if len(anchors) != table.d:
        raise AnchorError(f"Need {table.d} anchors, got {len(anchors)}")
    base = tuple(a for a, _ in anchors)
    for k, a in enumerate(base):
        if a not in table.axes[k]:
            raise AnchorError(f"Anchor {a!r} is not on axis {k}")
    values = table.as_dict()
    shares = PeriodMonomial.product(c for _, c in anchors)
    if not lattice.equivalent(shares, values[base]):
        raise AnchorError(
            f"Anchor product {shares} is not equivalent to f{base} = {values[base]}"
        )

    witness = exchange_witness(table, lattice)
    if witness is not None:
        x, y, k = witness
        raise ExchangeFailure(f"Exchange fails on axis {k} for {x} and {y}", witness)

    factors: List[Dict[Hashable, PeriodMonomial]] = []
    for k, (_, c) in enumerate(anchors):
        factor = {}
        for element in table.axes[k]:
            moved = base[:k] + (element,) + base[k + 1:]
            factor[element] = values[moved] / values[base] * c
        factors.append(factor)
    result = Factorization(tuple(factors))

    for point in table.points():
        if not lattice.equivalent(result.evaluate(point), values[point]):
            raise ExchangeFailure(f"Recovered factors miss f{point}", (point,))
    logger.debug("Factorized a %s table", "x".join(str(len(a)) for a in table.axes))
    return result
