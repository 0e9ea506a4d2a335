"""Sign maps I(Π, η) and their Galois transport."""

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from ..core.embeddings import EmbeddingSet, invert
from ..core.halfint import HalfInt
from ..core.types import CharacterType, InfinityType, check_same
from ..errors import CollisionError, RangeError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignMap:
    """I: Σ_{F;K} → {0, …, n}."""

    embeddings: EmbeddingSet
    n: int
    values: Tuple[int, ...]

    @classmethod
    def create(cls, embeddings: EmbeddingSet, values: Mapping[str, int], n: int) -> "SignMap":
        try:
            ordered = tuple(int(values[label]) for label in embeddings.labels)
        except KeyError as err:
            raise ValidationError(f"Sign map misses place {err.args[0]!r}") from err
        bad = [v for v in ordered if not 0 <= v <= n]
        if bad:
            raise RangeError(f"Sign map values {bad} fall outside 0..{n}")
        return cls(embeddings=embeddings, n=n, values=ordered)

    @classmethod
    def constant(cls, embeddings: EmbeddingSet, value: int, n: int) -> "SignMap":
        return cls.create(embeddings, {label: value for label in embeddings.labels}, n)

    def __call__(self, place: str) -> int:
        return self.values[self.embeddings.index(place)]

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.embeddings.labels, self.values))

    def key(self) -> str:
        """Stable identifier used inside period symbols."""
        return "I=" + ",".join(str(v) for v in self.values)


def _sign_quantities(t: InfinityType, eta: CharacterType, place: str) -> Tuple[HalfInt, ...]:
    a, b = eta.at(place)
    return tuple(a - b + x * 2 + t.weight for x in t.at(place))


def sign_map(t: InfinityType, eta: CharacterType) -> SignMap:
    """I(σ) = #{i : a(σ) − b(σ) + 2a_i(σ) + ω < 0}."""
    check_same(t.embeddings, eta.embeddings)
    values = {}
    for label in t.embeddings.labels:
        quantities = _sign_quantities(t, eta, label)
        if any(q == 0 for q in quantities):
            raise CollisionError(f"Character {eta.key()} is not in general position at {label}")
        values[label] = sum(1 for q in quantities if q < 0)
    return SignMap.create(t.embeddings, values, t.n)


def character_for_sign_map(t: InfinityType, target: SignMap) -> CharacterType:
    """A character of type z^{a(σ)} z̄^{-a(σ)} whose sign map against ``t`` is ``target``.

    The threshold −(a−b) sits half a unit above the largest exponent that has to be
    counted, or half a unit below the smallest one when nothing is counted.
    """
    check_same(t.embeddings, target.embeddings)
    if target.n != t.n:
        raise RangeError(f"Sign map has rank {target.n}, infinity type has rank {t.n}")
    if not t.weight.is_integral:
        raise ValidationError(f"Weight {t.weight} is not an integer; no integral threshold exists")
    if not t.is_n_regular(1):
        raise ValidationError("Exponents must be strictly decreasing by at least one")

    exps: Dict[str, HalfInt] = {}
    for label in t.embeddings.labels:
        centred = [x * 2 + t.weight for x in t.at(label)]
        count = target(label)
        threshold = centred[t.n - count] + 1 if count else centred[-1] - 1
        exps[label] = HalfInt(-threshold.doubled // 2)
    eta = CharacterType.create(t.embeddings, exps, {label: -x for label, x in exps.items()})
    logger.debug("Auxiliary character %s realizes %s", eta.key(), target.key())
    return eta


def galois_transport(signs: SignMap, perm: Mapping[str, str]) -> SignMap:
    """I^g(σ) = I(g⁻¹σ)."""
    inverse = invert(perm)
    return SignMap.create(
        signs.embeddings,
        {label: signs(inverse[label]) for label in signs.embeddings.labels},
        signs.n,
    )
