"""Built-in relation packs: CM-period laws and Blasius monomials."""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from ..core.embeddings import invert
from ..core.halfint import HalfInt, HalfIntLike
from ..core.types import CharacterType
from ..critical.sets import critical_set_character
from ..errors import MiddleClassError, NonCriticalError
from .lattice import Relation, RelationLattice
from .monomial import PeriodMonomial, two_pi_i
from .registry import CharacterDecl, CharacterRegistry
from .symbols import cm_period

logger = logging.getLogger(__name__)


def cm(char_id: str, place: str, exp: int = 1) -> PeriodMonomial:
    return PeriodMonomial.atom(cm_period(char_id, place), exp)


def _relations_for(decl: CharacterDecl, registry: CharacterRegistry) -> Iterable[Relation]:
    embeddings = decl.embeddings
    places = embeddings.places
    cid = decl.id

    if decl.product:
        for place in places:
            rhs = PeriodMonomial.product(cm(f, place, e) for f, e in decl.product)
            yield Relation(cm(cid, place) / rhs, f"cm.multiplicative[{cid}]")
    if decl.conjugate_of:
        for place in embeddings.labels:
            yield Relation(
                cm(cid, place) / cm(decl.conjugate_of, embeddings.conj(place)),
                f"cm.conjugation[{cid}]",
            )
            yield Relation(
                cm(cid, embeddings.conj(place)) / cm(decl.conjugate_of, place),
                f"cm.conjugation[{cid}]",
            )
    if decl.inverse_of:
        for place in places:
            yield Relation(cm(cid, place) * cm(decl.inverse_of, place), f"cm.inverse[{cid}]")
    if decl.norm_of and decl.restriction:
        restriction = registry.restrictions[decl.restriction]
        for place in places:
            yield Relation(
                cm(cid, place) / cm(decl.norm_of, restriction(place)),
                f"cm.norm_functoriality[{cid}]",
            )
    if decl.galois_of and decl.galois:
        inverse = invert(embeddings.permutation(decl.galois))
        for place in places:
            yield Relation(
                cm(cid, place) / cm(decl.galois_of, embeddings.act(inverse, place)),
                f"cm.galois[{cid}]",
            )
    if decl.csd:
        for place in embeddings.labels:
            yield Relation(cm(cid, place) * cm(cid, embeddings.conj(place)), f"cm.csd_reflection[{cid}]")
    if decl.finite_order:
        for place in places:
            yield Relation(cm(cid, place, decl.finite_order), f"cm.finite_order[{cid}]")
    if decl.trivial:
        for place in places:
            yield Relation(cm(cid, place), f"cm.trivial[{cid}]")
    if decl.norm:
        for place in places:
            yield Relation(cm(cid, place) / two_pi_i(), f"cm.norm_character[{cid}]")


def cm_relation_pack(
    registry: CharacterRegistry, chars: Optional[Sequence[str]] = None
) -> List[Relation]:
    """Every CM-period relation implied by the declared character arithmetic."""
    relations: List[Relation] = []
    for cid in chars if chars is not None else registry.ids():
        relations.extend(_relations_for(registry.character(cid), registry))
    logger.debug("CM pack: %d relations over %d characters", len(relations), len(registry.characters))
    return relations


def register_relations(lattice: RelationLattice, relations: Iterable[Relation]) -> RelationLattice:
    for relation in relations:
        lattice.add_relation(relation.monomial, relation.tag, relation.axiom)
    return lattice


def blasius_cm_type(eta: CharacterType) -> Tuple[str, ...]:
    """The CM type Φ_η: σ where a(σ) < b(σ), otherwise σ̄."""
    embeddings = eta.embeddings
    places = []
    for label, a, b in zip(embeddings.labels, eta.a, eta.b):
        if a == b:
            raise MiddleClassError(f"Character {eta.key()} has a = b at {label}")
        places.append(label if a < b else embeddings.conj(label))
    return tuple(places)


def blasius_monomial(
    char_id: str,
    eta: CharacterType,
    m: HalfIntLike,
    cm_type: Optional[Sequence[str]] = None,
) -> PeriodMonomial:
    """(2πi)^{m·|Φ|} Π_{σ∈Φ} p(χ̌, σ) for a critical integer m."""
    point = HalfInt.of(m)
    if point not in critical_set_character(eta):
        raise NonCriticalError(f"{point} is not critical for {char_id}")
    places = tuple(cm_type) if cm_type is not None else blasius_cm_type(eta)
    monomial = two_pi_i(point.to_int() * len(places))
    for place in places:
        monomial = monomial * cm(char_id, place)
    return monomial
