"""Whittaker periods, isobaric sums and the archimedean identities."""

import logging
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence, Tuple

from ..core.halfint import HalfInt, HalfIntLike
from ..core.types import CharacterType, InfinityType, direct_sum
from ..errors import MissingFactorizationError, ValidationError
from ..factorization.arithmetic import essential_twist_relations, local
from ..periods.lattice import Relation, RelationLattice
from ..periods.monomial import PeriodMonomial, two_pi_i
from ..periods.registry import CharacterRegistry, Representation
from ..periods.relations import cm_relation_pack, register_relations
from ..periods.symbols import arch_omega, arch_p, arch_z, l_value, l_value_label, whittaker

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsobaricPart:
    """One summand Π_i of an isobaric sum, known by id and infinity type."""

    id: str
    infinity: InfinityType


def omega(t: InfinityType, partition: Optional[Sequence[int]] = None) -> PeriodMonomial:
    """Ω_{partition}(t); the default partition (1, …, 1) gives Ω(t)."""
    return PeriodMonomial.atom(arch_omega(t.key(), partition or (1,) * t.n))


def z_factor(t: InfinityType) -> PeriodMonomial:
    return PeriodMonomial.atom(arch_z(t.key()))


def p_whittaker(rep_id: str) -> PeriodMonomial:
    return PeriodMonomial.atom(whittaker(rep_id))


def whittaker_formula(rep: Representation) -> PeriodMonomial:
    """Z(Π_∞) Π_σ Π_{i=1}^{n−1} P^{(i)}(Π, σ)."""
    if rep.n > 1 and rep.central is None:
        raise MissingFactorizationError(f"{rep.id} has no central character; its local periods are not anchored")
    monomial = z_factor(rep.infinity)
    for label in rep.infinity.embeddings.labels:
        for i in range(1, rep.n):
            monomial = monomial * local(rep, label, i)
    return monomial


def whittaker_relation(rep: Representation) -> Relation:
    return Relation(p_whittaker(rep.id) / whittaker_formula(rep), f"theorem.whittaker[{rep.id}]")


def cross_l_value(first: IsobaricPart, second: IsobaricPart) -> PeriodMonomial:
    """L(1, Π_i × Π_j^∨) as a fresh atom."""
    return PeriodMonomial.atom(l_value(l_value_label(first.id, f"{second.id}^v"), 1))


def whittaker_langlands_sum(
    total_id: str,
    parts: Sequence[IsobaricPart],
    cross: Optional[Mapping[Tuple[int, int], PeriodMonomial]] = None,
) -> List[Relation]:
    """p(Π^#) for Π^# = Π_1 ⊞ … ⊞ Π_k.

    Returns the relation p(Π^#) ~ Ω_{(n_1,…,n_k)}(Π^#_∞) Π p(Π_i) Π_{i<j} L(1, Π_i × Π_j^∨)
    together with Ω_{(n_1,…,n_k)}(Π^#_∞) ~ Ω(Π^#_∞) / Π Ω(Π_{i,∞}).
    ``cross`` supplies the L-values for index pairs i < j; missing pairs get fresh atoms.
    """
    if not parts:
        raise ValidationError("An isobaric sum needs at least one part")
    total = direct_sum([part.infinity for part in parts])
    partition = tuple(part.infinity.n for part in parts)
    cross = cross or {}

    rhs = omega(total, partition)
    for part in parts:
        rhs = rhs * p_whittaker(part.id)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            rhs = rhs * cross.get((i, j), cross_l_value(parts[i], parts[j]))

    ratio = omega(total)
    for part in parts:
        ratio = ratio / omega(part.infinity)
    logger.debug("Isobaric sum %s with partition %s", total_id, partition)
    return [
        Relation(p_whittaker(total_id) / rhs, f"theorem.whittaker_langlands_sum[{total_id}]"),
        Relation(omega(total, partition) / ratio, f"theorem.omega_partition[{total_id}]"),
    ]


def first_observation_relation(t: InfinityType) -> Relation:
    """Ω_{(n)}(t) ~ 1."""
    return Relation(omega(t, (t.n,)), "theorem.first_observation")


def divise_relation(t: InfinityType) -> Relation:
    """Z(t) Ω(t)^{-1} ~ (2πi)^{d r(r−1)/2} for t of rank r."""
    r = t.n
    exponent = t.embeddings.d * r * (r - 1) // 2
    return Relation(z_factor(t) / omega(t) / two_pi_i(exponent), "theorem.divise")


def threeproduct_relation(t: InfinityType, sharp: InfinityType, m: HalfIntLike) -> Relation:
    """Z(Π_∞) Ω(Π^#_∞) p(m, Π_∞, Π^#_∞) ~ (2πi)^{d n(n−1)(m+1/2) − d(n−1)(n−2)/2}."""
    if sharp.n != t.n - 1:
        raise ValidationError(f"Second factor must have rank {t.n - 1}, got {sharp.n}")
    n, d = t.n, t.embeddings.d
    point = HalfInt.of(m)
    exponent = ((point + HalfInt(1)) * (n * (n - 1))).to_int() * d - d * (n - 1) * (n - 2) // 2
    lhs = z_factor(t) * omega(sharp) * PeriodMonomial.atom(arch_p(point, t.key(), sharp.key()))
    return Relation(lhs / two_pi_i(exponent), "theorem.threeproduct")


def archimedean_p(t: InfinityType, sharp: InfinityType, m: HalfIntLike) -> PeriodMonomial:
    return PeriodMonomial.atom(arch_p(m, t.key(), sharp.key()))


def csd_twist_lemma_relation(
    base_id: str, base: InfinityType, twisted_id: str, twisted: InfinityType
) -> Relation:
    """p(Π ⊗ η) / Ω((Π ⊗ η)_∞) ~ p(Π) / Ω(Π_∞) for a conjugate self-dual η."""
    lhs = p_whittaker(twisted_id) / omega(twisted)
    rhs = p_whittaker(base_id) / omega(base)
    return Relation(lhs / rhs, f"theorem.csd_twist_lemma[{twisted_id}]")


def csd_twist_lemma_holds(rep: Representation, eta_id: str, registry: CharacterRegistry) -> bool:
    """Re-derive the twist lemma for an integral conjugate self-dual η.

    Uses only the Whittaker formula for Π and Π ⊗ η, the essential-twist relations,
    the CM relations of η and the divise identity for both infinity types.
    """
    decl = registry.character(eta_id)
    if not decl.csd:
        raise ValidationError(f"{eta_id} is not declared conjugate self-dual")
    eta: CharacterType = decl.type
    twisted = Representation(f"{rep.id}(x){eta_id}", rep.infinity.twist(eta), rep.central)
    lattice = RelationLattice()
    register_relations(lattice, cm_relation_pack(registry, [eta_id]))
    register_relations(lattice, essential_twist_relations(rep, twisted, eta_id))
    for relation in (
        whittaker_relation(rep),
        whittaker_relation(twisted),
        divise_relation(rep.infinity),
        divise_relation(twisted.infinity),
    ):
        lattice.add_relation(relation.monomial, relation.tag)
    lemma = csd_twist_lemma_relation(rep.id, rep.infinity, twisted.id, twisted.infinity)
    holds = lattice.is_trivial(lemma.monomial)
    logger.debug("Twist lemma re-derived for %s (x) %s: %s", rep.id, eta_id, holds)
    return holds
