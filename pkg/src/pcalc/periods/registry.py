"""Declared characters and representations with their arithmetic."""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..core.embeddings import EmbeddingSet, Restriction, invert
from ..core.halfint import HalfInt
from ..core.types import CharacterType, InfinityType
from ..errors import CharacterArithmeticError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacterDecl:
    """A Hecke character known by id, its infinity type and declared arithmetic."""

    id: str
    type: CharacterType
    product: Tuple[Tuple[str, int], ...] = ()
    conjugate_of: Optional[str] = None
    inverse_of: Optional[str] = None
    norm_of: Optional[str] = None
    restriction: Optional[str] = None
    galois_of: Optional[str] = None
    galois: Optional[str] = None
    csd: bool = False
    finite_order: Optional[int] = None
    norm: bool = False
    trivial: bool = False

    @property
    def embeddings(self) -> EmbeddingSet:
        return self.type.embeddings


@dataclass(frozen=True)
class Representation:
    """An automorphic representation known through its infinity type."""

    id: str
    infinity: InfinityType
    central: Optional[str] = None

    @property
    def n(self) -> int:
        return self.infinity.n


@dataclass
class CharacterRegistry:
    """Characters, representations and restriction maps of one problem."""

    embedding_sets: Dict[str, EmbeddingSet] = field(default_factory=dict)
    restrictions: Dict[str, Restriction] = field(default_factory=dict)
    characters: Dict[str, CharacterDecl] = field(default_factory=dict)
    representations: Dict[str, Representation] = field(default_factory=dict)

    def add_embeddings(self, embeddings: EmbeddingSet) -> EmbeddingSet:
        self.embedding_sets[embeddings.name] = embeddings
        return embeddings

    def add_restriction(self, restriction: Restriction) -> Restriction:
        self.restrictions[restriction.name] = restriction
        for embeddings in (restriction.source, restriction.target):
            self.embedding_sets.setdefault(embeddings.name, embeddings)
        return restriction

    def character(self, char_id: str) -> CharacterDecl:
        try:
            return self.characters[char_id]
        except KeyError as err:
            raise ValidationError(f"Unknown character {char_id!r}") from err

    def representation(self, rep_id: str) -> Representation:
        try:
            return self.representations[rep_id]
        except KeyError as err:
            raise ValidationError(f"Unknown representation {rep_id!r}") from err

    def add_representation(self, rep: Representation) -> Representation:
        if rep.central is not None and rep.central not in self.characters:
            raise ValidationError(f"Central character {rep.central!r} of {rep.id} is not declared")
        self.representations[rep.id] = rep
        return rep

    def declare(self, decl: CharacterDecl) -> CharacterDecl:
        """Register a character after checking its arithmetic against its type."""
        existing = self.characters.get(decl.id)
        if existing is not None:
            if existing.type != decl.type:
                raise CharacterArithmeticError(f"Character {decl.id} declared twice with different types")
            return existing
        for problem in self._arithmetic_problems(decl):
            raise CharacterArithmeticError(f"Character {decl.id}: {problem}")
        self.characters[decl.id] = decl
        logger.debug("Declared character %s of type %s", decl.id, decl.type.key())
        return decl

    def declare_type(self, char_id: str, char_type: CharacterType, **arithmetic: object) -> CharacterDecl:
        return self.declare(CharacterDecl(id=char_id, type=char_type, **arithmetic))  # type: ignore[arg-type]

    def _arithmetic_problems(self, decl: CharacterDecl) -> Iterable[str]:
        t = decl.type
        embeddings = t.embeddings
        if decl.product:
            total = CharacterType.trivial(embeddings)
            for factor, exp in decl.product:
                total = total * (self.character(factor).type ** exp)
            if total != t:
                yield f"type {t.key()} differs from the product type {total.key()}"
        if decl.conjugate_of and self.character(decl.conjugate_of).type.conjugate() != t:
            yield f"type is not the conjugate of {decl.conjugate_of}"
        if decl.inverse_of and self.character(decl.inverse_of).type.inverse() != t:
            yield f"type is not the inverse of {decl.inverse_of}"
        if decl.norm_of:
            if decl.restriction not in self.restrictions:
                yield f"norm_of needs a registered restriction, got {decl.restriction!r}"
            else:
                pulled = self.character(decl.norm_of).type.pullback(self.restrictions[decl.restriction])
                if pulled != t:
                    yield f"type is not the pullback of {decl.norm_of}"
        if decl.galois_of:
            perm = invert(embeddings.permutation(decl.galois or ""))
            source = self.character(decl.galois_of).type
            moved = CharacterType(
                embeddings,
                tuple(source.at(embeddings.act(perm, label))[0] for label in embeddings.labels),
                tuple(source.at(embeddings.act(perm, label))[1] for label in embeddings.labels),
            )
            if moved != t:
                yield f"type is not the Galois transform of {decl.galois_of}"
        if decl.csd and any(a != -b for a, b in zip(t.a, t.b)):
            yield "declared conjugate self-dual but b != -a"
        if (decl.finite_order or decl.trivial) and t != CharacterType.trivial(embeddings):
            yield "finite-order characters have trivial infinity type"
        if decl.finite_order is not None and decl.finite_order < 1:
            yield f"order {decl.finite_order} is not positive"
        if decl.norm and t != CharacterType.norm(embeddings):
            yield "the norm character has type z^1 zbar^1"

    def fork(self) -> "CharacterRegistry":
        """A private copy for one derivation run."""
        return CharacterRegistry(
            embedding_sets=dict(self.embedding_sets),
            restrictions=dict(self.restrictions),
            characters=dict(self.characters),
            representations=dict(self.representations),
        )

    def ensure_central(self, rep: Representation) -> Representation:
        """Declare ξ_Π from the infinity type when the representation has none."""
        if rep.central is not None:
            return self.add_representation(rep) if rep.id not in self.representations else rep
        t = rep.infinity
        labels = t.embeddings.labels
        a = {label: sum(t.at(label), HalfInt(0)) for label in labels}
        b = {label: sum(t.at(t.embeddings.conj(label)), HalfInt(0)) for label in labels}
        xi_type = CharacterType.create(t.embeddings, a, b)
        xi = self.declare_type(f"xi[{rep.id}]", xi_type, csd=xi_type.is_conjugate_self_dual)
        anchored = Representation(rep.id, t, xi.id)
        self.representations[rep.id] = anchored
        logger.debug("Declared central character %s for %s", xi.id, rep.id)
        return anchored

    def places_of(self, char_id: str) -> Tuple[str, ...]:
        return self.character(char_id).embeddings.places

    def ids(self) -> List[str]:
        return sorted(self.characters)

    def describe(self) -> Mapping[str, str]:
        return {cid: decl.type.key() for cid, decl in sorted(self.characters.items())}
