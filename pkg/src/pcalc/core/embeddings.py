"""Embedding sets Σ_{F;K}, their conjugation, Galois actions and restrictions."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import FiberError, ValidationError

CONJUGATE_PREFIX = "~"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbeddingSet:
    """Labels of Σ_{F;K}, their conjugates, and named label permutations."""

    name: str
    labels: Tuple[str, ...]
    conjugates: Tuple[str, ...]
    galois: Tuple[Tuple[str, Tuple[str, ...]], ...] = ()

    @classmethod
    def create(
        cls,
        labels: Sequence[str],
        conjugates: Optional[Sequence[str]] = None,
        galois: Optional[Mapping[str, Sequence[str]]] = None,
        name: str = "F",
    ) -> "EmbeddingSet":
        labels = tuple(labels)
        if not labels:
            raise ValidationError(f"Embedding set {name} has no labels")
        if len(set(labels)) != len(labels):
            raise ValidationError(f"Embedding set {name} repeats a label")
        conjugates = tuple(conjugates) if conjugates else tuple(
            CONJUGATE_PREFIX + label for label in labels
        )
        if len(conjugates) != len(labels):
            raise ValidationError(
                f"Embedding set {name}: {len(conjugates)} conjugates for {len(labels)} labels"
            )
        if len(set(conjugates)) != len(conjugates) or set(conjugates) & set(labels):
            raise ValidationError(
                f"Embedding set {name}: conjugation must be a fixed-point-free involution"
            )

        perms: List[Tuple[str, Tuple[str, ...]]] = []
        for perm_name, images in sorted((galois or {}).items()):
            images = tuple(images)
            if sorted(images) != sorted(labels):
                raise ValidationError(
                    f"Galois element {perm_name} is not a permutation of {name}"
                )
            perms.append((perm_name, images))
        return cls(name=name, labels=labels, conjugates=conjugates, galois=tuple(perms))

    @property
    def d(self) -> int:
        return len(self.labels)

    @property
    def places(self) -> Tuple[str, ...]:
        return self.labels + self.conjugates

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as err:
            raise ValidationError(f"{label!r} is not a label of {self.name}") from err

    def is_upper(self, place: str) -> bool:
        return place in self.labels

    def conj(self, place: str) -> str:
        if place in self.labels:
            return self.conjugates[self.labels.index(place)]
        if place in self.conjugates:
            return self.labels[self.conjugates.index(place)]
        raise ValidationError(f"{place!r} is not a place of {self.name}")

    def upper(self, place: str) -> str:
        """The Σ_{F;K} representative of a place."""
        return place if place in self.labels else self.conj(place)

    def permutation(self, name: str) -> Dict[str, str]:
        for perm_name, images in self.galois:
            if perm_name == name:
                return dict(zip(self.labels, images))
        raise ValidationError(f"{self.name} has no Galois element {name!r}")

    def act(self, perm: Mapping[str, str], place: str) -> str:
        """Apply a label permutation to any place, with g(σ̄) = conj(g(σ))."""
        if place in self.labels:
            return perm[place]
        return self.conj(perm[self.conj(place)])


def invert(perm: Mapping[str, str]) -> Dict[str, str]:
    return {image: source for source, image in perm.items()}


def compose(first: Mapping[str, str], then: Mapping[str, str]) -> Dict[str, str]:
    return {label: then[first[label]] for label in first}


@dataclass(frozen=True)
class Restriction:
    """The restriction map Σ_{𝓕;K} → Σ_{F;K} for a cyclic extension 𝓕/F."""

    name: str
    source: EmbeddingSet
    target: EmbeddingSet
    mapping: Tuple[Tuple[str, str], ...]
    deck: Optional[str] = None

    @classmethod
    def create(
        cls,
        source: EmbeddingSet,
        target: EmbeddingSet,
        mapping: Mapping[str, str],
        deck: Optional[str] = None,
        name: str = "res",
    ) -> "Restriction":
        missing = [label for label in source.labels if label not in mapping]
        if missing:
            raise ValidationError(f"Restriction {name} is not total; missing {missing}")
        unknown = [tau for tau in mapping.values() if tau not in target.labels]
        if unknown:
            raise ValidationError(f"Restriction {name} maps to unknown labels {unknown}")
        ordered = tuple((label, mapping[label]) for label in source.labels)
        restriction = cls(name=name, source=source, target=target, mapping=ordered, deck=deck)
        if deck is not None:
            restriction.deck_permutation()
        return restriction

    def __call__(self, place: str) -> str:
        table = dict(self.mapping)
        if place in table:
            return table[place]
        return self.target.conj(table[self.source.conj(place)])

    def fiber(self, tau: str) -> Tuple[str, ...]:
        return tuple(sigma for sigma, image in self.mapping if image == tau)

    def fibers(self) -> Dict[str, Tuple[str, ...]]:
        return {tau: self.fiber(tau) for tau in self.target.labels}

    def degree(self) -> int:
        """The common fibre size l; FiberError if fibres differ or are empty."""
        sizes = {tau: len(fiber) for tau, fiber in self.fibers().items()}
        distinct = set(sizes.values())
        if len(distinct) != 1 or 0 in distinct:
            raise FiberError(f"Restriction {self.name} has fibre sizes {sizes}")
        return distinct.pop()

    def check_fibers(self, expected: int) -> None:
        actual = self.degree()
        if actual != expected:
            raise FiberError(
                f"Restriction {self.name} has fibres of size {actual}, expected {expected}"
            )

    def deck_permutation(self) -> Dict[str, str]:
        """A generator of Gal(𝓕/F) acting on Σ_{𝓕;K}.

        Uses the declared Galois element when present; otherwise cycles each
        fibre in label order.
        """
        if self.deck is not None:
            perm = self.source.permutation(self.deck)
            for sigma, image in perm.items():
                if self(sigma) != self(image):
                    raise FiberError(
                        f"Deck element {self.deck} moves {sigma} out of its fibre"
                    )
            return perm
        perm: Dict[str, str] = {}
        for fiber in self.fibers().values():
            for position, sigma in enumerate(fiber):
                perm[sigma] = fiber[(position + 1) % len(fiber)]
        return perm

    def deck_powers(self) -> List[Dict[str, str]]:
        """g^0, g^1, …, g^{l−1} for the deck generator g."""
        generator = self.deck_permutation()
        powers = [{label: label for label in self.source.labels}]
        for _ in range(1, self.degree()):
            powers.append(compose(powers[-1], generator))
        return powers


def same_set(first: EmbeddingSet, second: EmbeddingSet) -> bool:
    return first.labels == second.labels and first.conjugates == second.conjugates
