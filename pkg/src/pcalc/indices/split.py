"""Split indices sp(j, Π'; Π, σ) and good position."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.halfint import HalfInt, HalfIntLike
from ..core.types import CharacterType, InfinityType
from ..errors import CollisionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitIndexVector:
    """Block sizes sp(0..n') of Π's exponents cut by the points of Π'."""

    entries: Tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.entries[j]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def tail_sum(self, j: int) -> int:
        """w(j) = Σ_{k ≥ j} sp(k)."""
        return sum(self.entries[j:])


def _centre_sums(pi: InfinityType, other: InfinityType, place: str) -> List[List[HalfInt]]:
    """Table of 2(a_i + b_k) + ω + ω', whose sign decides the split."""
    total_weight = pi.weight + other.weight
    return [
        [x * 2 + y * 2 + total_weight for y in other.at(place)] for x in pi.at(place)
    ]


def check_regular_pair(pi: InfinityType, other: InfinityType, place: Optional[str] = None) -> None:
    places = [place] if place is not None else list(pi.embeddings.labels)
    for label in places:
        for i, row in enumerate(_centre_sums(pi, other, label), start=1):
            for k, value in enumerate(row, start=1):
                if value == 0:
                    raise CollisionError(
                        f"a_{i}+b_{k} hits -(w+w')/2 at {label}; the pair has no critical points"
                    )


def split_indices(pi: InfinityType, other: InfinityType, place: str) -> SplitIndexVector:
    """sp(j, other; pi, place) for j = 0..n'."""
    check_regular_pair(pi, other, place)
    entries = [0] * (other.n + 1)
    for row in _centre_sums(pi, other, place):
        # number of split points lying above a_i
        entries[sum(1 for value in row if value < 0)] += 1
    return SplitIndexVector(tuple(entries))


def split_index_table(pi: InfinityType, other: InfinityType) -> Dict[str, SplitIndexVector]:
    return {label: split_indices(pi, other, label) for label in pi.embeddings.labels}


def is_good_position(pi: InfinityType, other: InfinityType) -> bool:
    return all(
        all(entry >= 1 for entry in vector.entries)
        for vector in split_index_table(pi, other).values()
    )


def _exchange_character(pi: InfinityType, other: InfinityType, place: str) -> CharacterType:
    """A conjugate-self-dual character whose twists stay collision free."""
    largest = max(abs(value.doubled) for row in _centre_sums(pi, other, place) for value in row)
    shift = largest // 4 + 1
    return CharacterType.uniform(pi.embeddings, shift, -shift)


def split_index_properties_check(
    pi: InfinityType,
    other: InfinityType,
    place: str,
    eta: Optional[CharacterType] = None,
) -> Dict[str, bool]:
    """Evaluate the four split-index identities on one instance."""
    base = split_indices(pi, other, place)
    reversed_entries = tuple(reversed(base.entries))
    eta = eta or _exchange_character(pi, other, place)
    results: Dict[str, bool] = {}

    results["sum"] = base.total == pi.n
    results["reversal"] = (
        split_indices(pi.conjugate(), other.conjugate(), place).entries == reversed_entries
        and split_indices(pi.dual(), other.dual(), place).entries == reversed_entries
    )

    norm_checks = []
    for power in (1, -1, "1/2"):
        norm = CharacterType.norm(pi.embeddings, power)
        norm_checks.append(split_indices(pi, other.twist(norm), place) == base)
        norm_checks.append(split_indices(pi.twist(norm), other, place) == base)
    results["norm_twist"] = all(norm_checks)

    try:
        exchange = (
            split_indices(pi, other.twist(eta), place)
            == split_indices(pi.twist(eta), other, place)
            and split_indices(pi, other.twist(eta.conjugate()), place)
            == split_indices(pi, other.twist(eta.inverse()), place)
            and split_indices(pi.twist(eta.conjugate()), other, place)
            == split_indices(pi.twist(eta.inverse()), other, place)
        )
    except CollisionError:
        logger.warning("Exchange character %s collides; item reported as failed", eta.key())
        exchange = False
    results["character_exchange"] = exchange

    logger.debug("Split lemma items at %s: %s", place, results)
    return results


def gap_positions(t: InfinityType, values: Sequence[HalfIntLike], place: str) -> Tuple[int, ...]:
    """For each value v, the number of −a_i(σ) lying below v.

    A result g means −a_g < v < −a_{g+1}; 0 and n mean below and above every −a_i.
    """
    negated = [-x for x in t.at(place)]
    positions = []
    for raw in values:
        value = HalfInt.of(raw)
        if value in negated:
            raise CollisionError(f"{value} coincides with an exponent of {t.key()} at {place}")
        positions.append(sum(1 for y in negated if y < value))
    return tuple(positions)
