"""Highest weights, minimal-length coset representatives W¹ and Hodge numbers."""

import itertools
import logging
from dataclasses import dataclass
from math import comb, prod
from typing import List, Mapping, Optional, Sequence, Tuple

from ..config import get_settings
from ..core.embeddings import EmbeddingSet
from ..core.types import check_same
from ..errors import BoundExceededError, ParityError, ValidationError
from ..indices.signs import SignMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HighestWeight:
    """λ = (λ0, (λ_1(σ) ≥ … ≥ λ_n(σ))_σ)."""

    embeddings: EmbeddingSet
    lambda0: int
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def create(
        cls, embeddings: EmbeddingSet, lambda0: int, rows: Mapping[str, Sequence[int]]
    ) -> "HighestWeight":
        ordered = []
        for label in embeddings.labels:
            if label not in rows:
                raise ValidationError(f"Highest weight misses place {label!r}")
            try:
                row = tuple(int(x) for x in rows[label])
            except (TypeError, ValueError) as err:
                raise ValidationError(f"Highest weight at {label} is not a row of integers: {err}") from err
            if any(x < y for x, y in zip(row, row[1:])):
                raise ValidationError(f"Highest weight at {label} is not weakly decreasing: {row}")
            ordered.append(row)
        if len({len(row) for row in ordered}) != 1:
            raise ValidationError("Highest weight rows must share one length")
        return cls(embeddings=embeddings, lambda0=int(lambda0), rows=tuple(ordered))

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.rows)

    @property
    def parity_ok(self) -> bool:
        return (self.total - self.lambda0) % 2 == 0

    def at(self, place: str) -> Tuple[int, ...]:
        return self.rows[self.embeddings.index(place)]


@dataclass(frozen=True)
class WOneElement:
    """Per-place permutations in one-line notation, increasing on both blocks."""

    embeddings: EmbeddingSet
    perms: Tuple[Tuple[int, ...], ...]
    blocks: Tuple[int, ...]

    def at(self, place: str) -> Tuple[int, ...]:
        return self.perms[self.embeddings.index(place)]

    @property
    def length(self) -> int:
        """Total inversion count."""
        return sum(
            sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
            for perm in self.perms
        )

    def is_valid(self) -> bool:
        for perm, r in zip(self.perms, self.blocks):
            head, tail = perm[:r], perm[r:]
            if list(head) != sorted(head) or list(tail) != sorted(tail):
                return False
        return True


def _blocks(signs: SignMap) -> Tuple[int, ...]:
    """r_σ = n − I(σ)."""
    return tuple(signs.n - value for value in signs.values)


def _perm_from_head(n: int, head: Sequence[int]) -> Tuple[int, ...]:
    tail = [i for i in range(1, n + 1) if i not in head]
    return tuple(head) + tuple(tail)


def enumerate_W1(n: int, signs: SignMap, bound: Optional[int] = None) -> List[WOneElement]:
    """All of W¹ in lexicographic order of the chosen heads; identity comes first."""
    bound = get_settings().w1_bound if bound is None else bound
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds the W1 enumeration bound {bound}")
    if signs.n != n:
        raise ValidationError(f"Sign map has rank {signs.n}, expected {n}")

    blocks = _blocks(signs)
    per_place = [
        [_perm_from_head(n, head) for head in itertools.combinations(range(1, n + 1), r)]
        for r in blocks
    ]
    elements = [
        WOneElement(signs.embeddings, tuple(choice), blocks)
        for choice in itertools.product(*per_place)
    ]
    logger.debug("Enumerated %d elements of W1 for blocks %s", len(elements), blocks)
    expected = prod(comb(n, r) for r in blocks)
    if len(elements) != expected:
        raise ValidationError(f"W1 enumeration produced {len(elements)} elements, expected {expected}")
    return elements


def longest_element(n: int, signs: SignMap) -> WOneElement:
    """w₀: sends the first r_σ positions to s_σ+1..n."""
    blocks = _blocks(signs)
    perms = tuple(_perm_from_head(n, tuple(range(n - r + 1, n + 1))) for r in blocks)
    return WOneElement(signs.embeddings, perms, blocks)


def identity_element(n: int, signs: SignMap) -> WOneElement:
    blocks = _blocks(signs)
    return WOneElement(signs.embeddings, tuple(tuple(range(1, n + 1)) for _ in blocks), blocks)


def star_action(w: WOneElement, weight: HighestWeight) -> HighestWeight:
    """(w*λ)_i(σ) = λ_{w_σ(i)}(σ) − w_σ(i) + i."""
    check_same(w.embeddings, weight.embeddings)
    rows = tuple(
        tuple(row[image - 1] - image + i for i, image in enumerate(perm, start=1))
        for perm, row in zip(w.perms, weight.rows)
    )
    return HighestWeight(weight.embeddings, weight.lambda0, rows)


def hodge_number(w: WOneElement, weight: HighestWeight, signs: SignMap) -> int:
    if not weight.parity_ok:
        raise ParityError(
            f"λ0={weight.lambda0} and Σλ={weight.total} have different parity"
        )
    if _blocks(signs) != w.blocks:
        raise ValidationError("W1 element was built for another signature")
    twisted = star_action(w, weight)
    head_sum = sum(sum(row[:r]) for row, r in zip(twisted.rows, w.blocks))
    return (weight.total - weight.lambda0) // 2 - head_sum


def hodge_number_w0(weight: HighestWeight, signs: SignMap) -> int:
    """Closed form of p(w₀, λ): (Σλ − λ0 + D)/2 − Σ_σ Σ_{i>s_σ} λ_i(σ)."""
    if not weight.parity_ok:
        raise ParityError(f"λ0={weight.lambda0} and Σλ={weight.total} have different parity")
    tail = sum(sum(row[s:]) for row, s in zip(weight.rows, signs.values))
    return (weight.total - weight.lambda0 + shimura_dimension(signs.n, signs)) // 2 - tail


def shimura_dimension(n: int, signs: SignMap) -> int:
    """D = 2 Σ_σ r_σ s_σ."""
    return 2 * sum((n - s) * s for s in signs.values)
