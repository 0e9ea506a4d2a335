"""Factorization of arithmetic automorphic periods into local periods."""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from ..errors import AnchorError, MissingFactorizationError, ValidationError
from ..indices.signs import SignMap
from ..periods.lattice import Relation, RelationLattice
from ..periods.monomial import PeriodMonomial
from ..periods.registry import Representation
from ..periods.relations import cm
from ..periods.symbols import global_period, local_period
from .tables import ProductTable, factorize

logger = logging.getLogger(__name__)

SignKey = Union[SignMap, Tuple[int, ...]]


def local(rep: Representation, place: str, s: int, exp: int = 1) -> PeriodMonomial:
    """P^{(s)}(Π, σ)^exp."""
    return PeriodMonomial.atom(local_period(rep.id, place, s, rep.n), exp)


def global_symbol(rep: Representation, signs: SignMap) -> PeriodMonomial:
    return PeriodMonomial.atom(global_period(rep.id, signs.key()))


def local_product(rep: Representation, signs: SignMap) -> PeriodMonomial:
    """Π_σ P^{(I(σ))}(Π, σ)."""
    return PeriodMonomial.product(
        local(rep, label, signs(label)) for label in rep.infinity.embeddings.labels
    )


def global_local_relation(rep: Representation, signs: SignMap) -> Relation:
    """P^{(I)}(Π) ~ Π_σ P^{(I(σ))}(Π, σ)."""
    return Relation(global_symbol(rep, signs) / local_product(rep, signs), f"factorization.global[{rep.id}]")


def _require_central(rep: Representation) -> str:
    if rep.central is None:
        raise MissingFactorizationError(f"{rep.id} has no central character; local periods are unanchored")
    return rep.central


def local_anchor_relations(rep: Representation) -> List[Relation]:
    """P^{(0)}(Π,σ) ~ p(ξ̌,σ̄) and P^{(n)}(Π,σ) ~ p(ξ̌,σ)."""
    xi = _require_central(rep)
    embeddings = rep.infinity.embeddings
    relations = []
    for label in embeddings.labels:
        relations.append(
            Relation(local(rep, label, 0) / cm(xi, embeddings.conj(label)), f"factorization.anchor0[{rep.id}]")
        )
        relations.append(
            Relation(local(rep, label, rep.n) / cm(xi, label), f"factorization.anchorN[{rep.id}]")
        )
    return relations


def compact_value(rep: Representation, signs: SignMap) -> PeriodMonomial:
    """Value of P^{(I)}(Π) at a compact I (every I(σ) ∈ {0, n})."""
    xi = _require_central(rep)
    embeddings = rep.infinity.embeddings
    factors = []
    for label in embeddings.labels:
        value = signs(label)
        if value not in (0, rep.n):
            raise ValidationError(f"I({label}) = {value} is not compact")
        factors.append(cm(xi, label) if value == rep.n else cm(xi, embeddings.conj(label)))
    return PeriodMonomial.product(factors)


@dataclass
class LocalFactorization:
    rep: Representation
    periods: Dict[Tuple[str, int], PeriodMonomial]
    relations: List[Relation] = field(default_factory=list)

    def __call__(self, place: str, s: int) -> PeriodMonomial:
        return self.periods[(place, s)]


def _key(signs: SignKey) -> Tuple[int, ...]:
    return signs.values if isinstance(signs, SignMap) else tuple(signs)


def factorize_arithmetic_periods(
    rep: Representation,
    table: Mapping[SignKey, PeriodMonomial],
    lattice: RelationLattice,
) -> LocalFactorization:
    """Local periods P^{(s)}(Π,σ) from the global table over all I ∈ {0..n}^Σ.

    Anchored by the central character; the compact entries of the table must agree
    with the CM-period values. The local symbols and their anchors are registered
    in ``lattice``.
    """
    embeddings = rep.infinity.embeddings
    n = rep.n
    values = {_key(k): v for k, v in table.items()}
    axes = [tuple(range(n + 1))] * embeddings.d

    for point in itertools.product(range(n + 1), repeat=embeddings.d):
        if all(v in (0, n) for v in point):
            signs = SignMap.create(embeddings, dict(zip(embeddings.labels, point)), n)
            expected = compact_value(rep, signs)
            if point not in values:
                raise ValidationError(f"Global table misses the compact entry {point}")
            if not lattice.equivalent(values[point], expected):
                raise AnchorError(f"Compact entry {point} is not {expected}")

    product = ProductTable.create(axes, values)
    xi = _require_central(rep)
    anchors = [(0, cm(xi, embeddings.conj(label))) for label in embeddings.labels]
    factors = factorize(product, lattice, anchors)

    periods: Dict[Tuple[str, int], PeriodMonomial] = {}
    relations: List[Relation] = []
    for label, factor in zip(embeddings.labels, factors.factors):
        for s in range(n + 1):
            periods[(label, s)] = factor[s]
            relations.append(Relation(local(rep, label, s) / factor[s], f"factorization.local[{rep.id}]"))
    for point, value in values.items():
        signs = SignMap.create(embeddings, dict(zip(embeddings.labels, point)), n)
        relations.append(Relation(global_symbol(rep, signs) / value, f"factorization.table[{rep.id}]"))
    relations.extend(local_anchor_relations(rep))
    for relation in relations:
        lattice.add_relation(relation.monomial, relation.tag)

    for label in embeddings.labels:
        product_0n = local(rep, label, 0) * local(rep, label, n)
        if lattice.is_trivial(product_0n):
            relations.append(Relation(product_0n, f"factorization.p0_pn[{rep.id}]"))
        else:
            logger.info("P^(0)P^(n) ~ 1 does not follow for %s at %s", rep.id, label)
    logger.info("Factorized arithmetic periods of %s over %d places", rep.id, embeddings.d)
    return LocalFactorization(rep, periods, relations)


def essential_twist_relations(
    rep: Representation, twisted: Representation, eta: str
) -> List[Relation]:
    """P^{(s)}(Π⊗η,σ) ~ P^{(s)}(Π,σ) p(η̌,σ)^s p(η̌,σ̄)^{n−s}."""
    embeddings = rep.infinity.embeddings
    n = rep.n
    relations = []
    for label in embeddings.labels:
        bar = embeddings.conj(label)
        for s in range(n + 1):
            rhs = local(rep, label, s) * cm(eta, label, s) * cm(eta, bar, n - s)
            relations.append(
                Relation(local(twisted, label, s) / rhs, f"factorization.essential_twist[{twisted.id}]")
            )
    return relations


def conjugate_relations(rep: Representation, conjugate: Representation) -> List[Relation]:
    """P^{(k)}(Π^c,σ) ~ P^{(n−k)}(Π,σ)."""
    n = rep.n
    return [
        Relation(
            local(conjugate, label, k) / local(rep, label, n - k),
            f"factorization.conjugate[{conjugate.id}]",
        )
        for label in rep.infinity.embeddings.labels
        for k in range(n + 1)
    ]


def galois_invariance_relations(
    rep: Representation, perms: Sequence[Mapping[str, str]]
) -> List[Relation]:
    """P^{(s)}(Π,σ) ~ P^{(s)}(Π,gσ) for a Galois-invariant Π."""
    relations = []
    for perm in perms:
        for label in rep.infinity.embeddings.labels:
            if perm[label] == label:
                continue
            for s in range(rep.n + 1):
                relations.append(
                    Relation(
                        local(rep, label, s) / local(rep, perm[label], s),
                        f"factorization.galois_invariance[{rep.id}]",
                    )
                )
    return relations
