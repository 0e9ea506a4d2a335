"""Deligne periods of tensor products and the motivic periods Q_i, δ, Q^{(j)}."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.halfint import HalfInt
from ..errors import DictionaryGapError, EmbeddingMismatchError, MiddleClassError, RangeError
from ..indices.split import split_indices
from ..periods.lattice import Relation
from ..periods.monomial import ONE, PeriodMonomial, two_pi_i
from ..periods.registry import Representation
from ..periods.symbols import motivic_delta, motivic_q, motivic_qj
from .models import MotiveHodgeData

logger = logging.getLogger(__name__)


def q_period(motive: MotiveHodgeData, i: int, place: str, exp: int = 1) -> PeriodMonomial:
    return PeriodMonomial.atom(motivic_q(motive.id, i, place, motive.n), exp)


def delta(motive_id: str, place: str, exp: int = 1) -> PeriodMonomial:
    """δ^Del(M, σ); also used for the rank-one motive of a character id."""
    return PeriodMonomial.atom(motivic_delta(motive_id, place), exp)


def qj_symbol(motive: MotiveHodgeData, j: int, place: str, exp: int = 1) -> PeriodMonomial:
    return PeriodMonomial.atom(motivic_qj(motive.id, j, place, motive.n), exp)


def _central(motive: MotiveHodgeData) -> str:
    if motive.central is None:
        raise DictionaryGapError(f"{motive.id} has no central character; Δ(M, σ) has no counterpart")
    return motive.central


def middle_pairs(motive: MotiveHodgeData, other: MotiveHodgeData, place: str) -> List[Tuple[int, int]]:
    total = motive.weight + other.weight
    return [
        (t, u)
        for t, p in enumerate(motive.at(place), start=1)
        for u, r in enumerate(other.at(place), start=1)
        if (p + r) * 2 == total
    ]


def a_set(motive: MotiveHodgeData, other: MotiveHodgeData, place: str) -> List[Tuple[int, int]]:
    """A(M, M')(σ) = {(t, u) : p_t(σ) + r_u(σ) > (ω(M) + ω(M'))/2}."""
    middle = middle_pairs(motive, other, place)
    if middle:
        raise MiddleClassError(
            f"{motive.id} (x) {other.id} has a middle class at {place} from the pair {middle[0]}"
        )
    total = motive.weight + other.weight
    return [
        (t, u)
        for t, p in enumerate(motive.at(place), start=1)
        for u, r in enumerate(other.at(place), start=1)
        if (p + r) * 2 > total
    ]


def deligne_period(
    motive: MotiveHodgeData,
    other: MotiveHodgeData,
    cm_type: Optional[Sequence[str]] = None,
) -> PeriodMonomial:
    """c^+ of the restriction of scalars of M ⊗ M', as a monomial in Q_i and δ.

    Π_{σ∈Ψ} Π_{(t,u)∈A(σ)} Q_t(M,σ)^{-1} Q_u(M',σ)^{-1} · δ(M,σ)^{n'} δ(M',σ)^{n}.
    The default CM type Ψ is the set of labels of the embedding set.
    """
    if motive.embeddings.labels != other.embeddings.labels:
        raise EmbeddingMismatchError(f"{motive.id} and {other.id} live over different fields")
    places = tuple(cm_type) if cm_type is not None else motive.embeddings.labels
    monomial = ONE
    for place in places:
        for t, u in a_set(motive, other, place):
            monomial = monomial / q_period(motive, t, place) / q_period(other, u, place)
        monomial = monomial * delta(motive.id, place, other.n) * delta(other.id, place, motive.n)
    logger.debug("Deligne period of %s (x) %s over %s: %s", motive.id, other.id, places, monomial)
    return monomial


def motivic_local_period(motive: MotiveHodgeData, j: int, place: str) -> PeriodMonomial:
    """Q^{(j)}(M, σ) = Q_1^{-1} … Q_j^{-1} · δ(ξ, σ)."""
    if not 0 <= j <= motive.n:
        raise RangeError(f"Q^({j}) outside 0..{motive.n} for {motive.id}")
    monomial = delta(_central(motive), place)
    for i in range(1, j + 1):
        monomial = monomial / q_period(motive, i, place)
    return monomial


def delta_relations(motive: MotiveHodgeData, places: Sequence[str]) -> List[Relation]:
    """δ(M,σ)(2πi)^{n(n−1)/2} ~ δ(ξ,σ), from Λ^n M = M(ξ)(−n(n−1)/2)."""
    xi = _central(motive)
    shift = motive.n * (motive.n - 1) // 2
    return [
        Relation(delta(motive.id, place) * two_pi_i(shift) / delta(xi, place), f"motivic.delta[{motive.id}]")
        for place in places
    ]


def qj_relations(motive: MotiveHodgeData, places: Sequence[str]) -> List[Relation]:
    return [
        Relation(
            qj_symbol(motive, j, place) / motivic_local_period(motive, j, place),
            f"motivic.qj[{motive.id}]",
        )
        for place in places
        for j in range(motive.n + 1)
    ]


def conjugate_motive_relations(motive: MotiveHodgeData, places: Sequence[str]) -> List[Relation]:
    """Q_i(M^c, σ) ~ Q_{n+1−i}(M, σ)^{-1}."""
    conjugate = motive.conjugate()
    n = motive.n
    return [
        Relation(
            q_period(conjugate, i, place) * q_period(motive, n + 1 - i, place),
            f"motivic.conjugate[{motive.id}]",
        )
        for place in places
        for i in range(1, n + 1)
    ]


def regrouping_holds(pi: Representation, other: Representation) -> Dict[str, bool]:
    """#{u : p_t + r_u > ω/2} equals w(t) of the split indices, per place and side."""
    motive = MotiveHodgeData.from_representation(pi)
    motive_other = MotiveHodgeData.from_representation(other)
    results = {}
    for place in pi.infinity.embeddings.labels:
        pairs = a_set(motive, motive_other, place)
        sp = split_indices(other.infinity, pi.infinity, place)
        sp_other = split_indices(pi.infinity, other.infinity, place)
        left = all(
            sum(1 for t, _ in pairs if t == row) == sp.tail_sum(row) for row in range(1, motive.n + 1)
        )
        right = all(
            sum(1 for _, u in pairs if u == col) == sp_other.tail_sum(col)
            for col in range(1, motive_other.n + 1)
        )
        results[place] = left and right
    return results


def regrouped_deligne_period(pi: Representation, other: Representation) -> PeriodMonomial:
    """(2πi)^{−nn'd(n+n'−2)/2} Π_σ Π_j Q^{(j)}(M,σ)^{sp(j)} Π_k Q^{(k)}(M',σ)^{sp'(k)}."""
    motive = MotiveHodgeData.from_representation(pi)
    motive_other = MotiveHodgeData.from_representation(other)
    embeddings = pi.infinity.embeddings
    n, n_other = pi.n, other.n
    monomial = two_pi_i(-(n * n_other * embeddings.d * (n + n_other - 2)) // 2)
    for place in embeddings.labels:
        sp = split_indices(other.infinity, pi.infinity, place)
        sp_other = split_indices(pi.infinity, other.infinity, place)
        for j in range(n + 1):
            monomial = monomial * qj_symbol(motive, j, place, sp[j])
        for k in range(n_other + 1):
            monomial = monomial * qj_symbol(motive_other, k, place, sp_other[k])
    return monomial


def motive_critical_shift(pi: Representation, other: Representation) -> HalfInt:
    """m ↦ m + (n+n'−2)/2 between pair and motive critical points."""
    return HalfInt(pi.n + other.n - 2)
