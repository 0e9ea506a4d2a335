"""Critical sets for motives, Hecke characters and automorphic pairs."""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..core.halfint import HalfInt, HalfIntLike, ZERO
from ..core.types import CharacterType, InfinityType, check_same
from ..errors import BoundExceededError, CollisionError, MiddleClassError, PcalcError
from ..hodge.weights import HighestWeight
from ..indices.signs import SignMap
from ..indices.split import check_regular_pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HodgeTypeList:
    """Hodge numbers p_1 > … > p_n of weight w; q_i = w − p_i."""

    weight: HalfInt
    ps: Tuple[HalfInt, ...]

    @classmethod
    def create(cls, weight: HalfIntLike, ps: Sequence[HalfIntLike]) -> "HodgeTypeList":
        return cls(
            weight=HalfInt.of(weight),
            ps=tuple(sorted((HalfInt.of(p) for p in ps), reverse=True)),
        )

    @property
    def pairs(self) -> List[Tuple[HalfInt, HalfInt]]:
        return [(p, self.weight - p) for p in self.ps]


@dataclass(frozen=True)
class CriticalSet:
    """Points of ℤ + offset between two bounds; ``None`` bounds are unbounded."""

    offset: HalfInt
    lower: Optional[HalfInt]
    upper: Optional[HalfInt]
    empty: bool = False

    @classmethod
    def between(
        cls, lower: Optional[HalfInt], upper: Optional[HalfInt], offset: HalfInt = ZERO
    ) -> "CriticalSet":
        offset = HalfInt(offset.doubled % 2)
        if lower is not None and lower.doubled % 2 != offset.doubled:
            lower = lower + HalfInt(1)
        if upper is not None and upper.doubled % 2 != offset.doubled:
            upper = upper - HalfInt(1)
        if lower is not None and upper is not None and lower > upper:
            return cls.nothing(offset)
        return cls(offset=offset, lower=lower, upper=upper)

    @classmethod
    def nothing(cls, offset: HalfInt = ZERO) -> "CriticalSet":
        return cls(offset=HalfInt(offset.doubled % 2), lower=None, upper=None, empty=True)

    @property
    def is_empty(self) -> bool:
        return self.empty

    def __contains__(self, point: object) -> bool:
        if self.empty:
            return False
        try:
            value = HalfInt.of(point)  # type: ignore[arg-type]
        except PcalcError:
            return False
        if (value.doubled - self.offset.doubled) % 2:
            return False
        if self.lower is not None and value < self.lower:
            return False
        return self.upper is None or value <= self.upper

    def members(self, limit: int = 10_000) -> List[HalfInt]:
        if self.empty:
            return []
        if self.lower is None or self.upper is None:
            raise BoundExceededError("Cannot list an unbounded critical set")
        count = (self.upper - self.lower).doubled // 2 + 1
        if count > limit:
            raise BoundExceededError(f"Critical set has {count} points, limit {limit}")
        return [self.lower + HalfInt(2 * k) for k in range(count)]

    def __iter__(self) -> Iterator[HalfInt]:
        return iter(self.members())

    def intersect(self, other: "CriticalSet") -> "CriticalSet":
        if self.offset != other.offset or self.empty or other.empty:
            return CriticalSet.nothing(self.offset)
        lows = [x for x in (self.lower, other.lower) if x is not None]
        highs = [x for x in (self.upper, other.upper) if x is not None]
        return CriticalSet.between(
            max(lows) if lows else None, min(highs) if highs else None, self.offset
        )

    def shift(self, amount: HalfIntLike) -> "CriticalSet":
        amount = HalfInt.of(amount)
        if self.empty:
            return CriticalSet.nothing(self.offset + amount)
        return CriticalSet.between(
            None if self.lower is None else self.lower + amount,
            None if self.upper is None else self.upper + amount,
            self.offset + amount,
        )

    def describe(self) -> str:
        if self.empty:
            return "{}"
        low = "-inf" if self.lower is None else str(self.lower)
        high = "+inf" if self.upper is None else str(self.upper)
        return f"[{low}, {high}] in Z+{self.offset}"


def critical_set_motive(hodge: HodgeTypeList) -> CriticalSet:
    """Deligne's criterion for a Hodge list without middle class."""
    middle = [p for p in hodge.ps if p * 2 == hodge.weight]
    if middle:
        raise MiddleClassError(f"Hodge number {middle[0]} sits on the middle line w/2")
    w = hodge.weight
    below = [p for p in hodge.ps if p * 2 < w]
    above = [p for p in hodge.ps if p * 2 > w]
    p_low = max(below) if below else None
    p_high = min(above) if above else None

    lows, highs = [], []
    if p_low is not None:
        lows.append(p_low + 1)
        highs.append(w - p_low)
    if p_high is not None:
        lows.append(w + 1 - p_high)
        highs.append(p_high)
    return CriticalSet.between(max(lows) if lows else None, min(highs) if highs else None)


def _pair_bounds(centre_sum: HalfInt, total_weight: HalfInt) -> Tuple[HalfInt, HalfInt]:
    """The interval attached to one c = a_i + b_j; symmetric about (W+1)/2."""
    if (-centre_sum) * 2 > total_weight:
        return total_weight + 1 + centre_sum, -centre_sum
    return 1 - centre_sum, total_weight + centre_sum


def critical_set_pair(pi: InfinityType, other: InfinityType) -> CriticalSet:
    """Critical m ∈ ℤ + (n+n')/2 for L(s, Π × Π'); empty under a collision."""
    check_same(pi.embeddings, other.embeddings)
    offset = HalfInt((pi.n + other.n) % 2)
    try:
        check_regular_pair(pi, other)
    except CollisionError as err:
        logger.info("No critical points: %s", err)
        return CriticalSet.nothing(offset)

    total_weight = pi.weight + other.weight
    lows, highs = [], []
    for label in pi.embeddings.labels:
        for x in pi.at(label):
            for y in other.at(label):
                low, high = _pair_bounds(x + y, total_weight)
                lows.append(low)
                highs.append(high)
    return CriticalSet.between(max(lows), min(highs), offset)


def critical_set_character(eta: CharacterType) -> CriticalSet:
    """Critical integers for L(s, η); M(η) has Hodge type (−a(σ), −b(σ)) at σ."""
    hodge = HodgeTypeList.create(eta.omega, [-a for a in eta.a])
    try:
        return critical_set_motive(hodge)
    except MiddleClassError as err:
        raise MiddleClassError(f"Character {eta.key()} has a = -w/2 somewhere") from err


def is_critical_pair(pi: InfinityType, other: InfinityType, point: HalfIntLike) -> bool:
    return HalfInt.of(point) in critical_set_pair(pi, other)


def motive_hodge_data(t: InfinityType) -> Dict[str, HodgeTypeList]:
    """p_i(σ) = −a_{n+1−i}(σ) + (n−1)/2 and weight ω + n − 1."""
    shift = HalfInt(t.n - 1)
    weight = t.weight + (t.n - 1)
    return {
        label: HodgeTypeList.create(weight, [-x + shift for x in t.at(label)])
        for label in t.embeddings.labels
    }


def tensor_hodge_data(
    first: Mapping[str, HodgeTypeList], second: Mapping[str, HodgeTypeList]
) -> Dict[str, HodgeTypeList]:
    """Hodge numbers of M ⊗ M' at each place."""
    result = {}
    for label, hodge in first.items():
        other = second[label]
        result[label] = HodgeTypeList.create(
            hodge.weight + other.weight, [p + q for p in hodge.ps for q in other.ps]
        )
    return result


def critical_set_pair_via_motive(pi: InfinityType, other: InfinityType) -> CriticalSet:
    """Same set as critical_set_pair, computed on M(Π) ⊗ M(Π') and shifted back."""
    offset = HalfInt((pi.n + other.n) % 2)
    tensor = tensor_hodge_data(motive_hodge_data(pi), motive_hodge_data(other))
    shift = HalfInt(pi.n + other.n - 2)
    result = CriticalSet.between(None, None)
    try:
        for hodge in tensor.values():
            result = result.intersect(critical_set_motive(hodge))
    except MiddleClassError:
        return CriticalSet.nothing(offset)
    return result.shift(-shift)


def motivic_triple_critical(
    weight: HighestWeight,
    signs: SignMap,
    k: Mapping[str, int],
    kappa: int,
    m: int,
) -> bool:
    """Both inequalities of the (π, χ, α) criterion at every place, r_σ = n − I(σ)."""
    n = weight.n
    for label in weight.embeddings.labels:
        row = weight.at(label)
        s = signs(label)
        r = n - s
        shift = k[label]
        # λ_0 = +inf and λ_{n+1} = -inf make the matching inequality vacuous
        if r + 1 <= n:
            lam = row[r]
            if not lam + shift + s - kappa <= m <= -lam - shift + r:
                return False
        if r >= 1:
            lam = row[r - 1]
            if not -lam - shift + r <= m <= lam + shift + s - kappa:
                return False
    return True
