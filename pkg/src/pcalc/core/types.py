"""Infinity types of representations and Hecke characters."""

import logging
from dataclasses import dataclass
from typing import List, Mapping, Sequence, Tuple

from ..errors import EmbeddingMismatchError, ValidationError
from .embeddings import EmbeddingSet, Restriction, same_set
from .halfint import HalfInt, HalfIntLike, lattice_offset, on_lattice

logger = logging.getLogger(__name__)


def check_same(first: EmbeddingSet, second: EmbeddingSet) -> None:
    if not same_set(first, second):
        raise EmbeddingMismatchError(
            f"Embedding sets {first.name} and {second.name} do not match"
        )


@dataclass(frozen=True)
class CharacterType:
    """Infinity type z^{a(σ)} z̄^{b(σ)} of an algebraic Hecke character."""

    embeddings: EmbeddingSet
    a: Tuple[HalfInt, ...]
    b: Tuple[HalfInt, ...]

    @classmethod
    def create(
        cls,
        embeddings: EmbeddingSet,
        a: Mapping[str, HalfIntLike],
        b: Mapping[str, HalfIntLike],
    ) -> "CharacterType":
        try:
            a_vals = tuple(HalfInt.of(a[label]) for label in embeddings.labels)
            b_vals = tuple(HalfInt.of(b[label]) for label in embeddings.labels)
        except KeyError as err:
            raise ValidationError(f"Character type misses place {err.args[0]!r}") from err
        sums = {x + y for x, y in zip(a_vals, b_vals)}
        if len(sums) != 1:
            raise ValidationError(
                "a(σ)+b(σ) must be constant over σ", [f"weights {sorted(sums)}"]
            )
        return cls(embeddings=embeddings, a=a_vals, b=b_vals)

    @classmethod
    def uniform(cls, embeddings: EmbeddingSet, a: HalfIntLike, b: HalfIntLike) -> "CharacterType":
        return cls.create(
            embeddings,
            {label: a for label in embeddings.labels},
            {label: b for label in embeddings.labels},
        )

    @classmethod
    def trivial(cls, embeddings: EmbeddingSet) -> "CharacterType":
        return cls.uniform(embeddings, 0, 0)

    @classmethod
    def norm(cls, embeddings: EmbeddingSet, power: HalfIntLike = 1) -> "CharacterType":
        """||·||^t, of type z^t z̄^t at every place."""
        return cls.uniform(embeddings, power, power)

    @property
    def omega(self) -> HalfInt:
        return -(self.a[0] + self.b[0])

    def at(self, place: str) -> Tuple[HalfInt, HalfInt]:
        if self.embeddings.is_upper(place):
            idx = self.embeddings.index(place)
            return self.a[idx], self.b[idx]
        idx = self.embeddings.index(self.embeddings.conj(place))
        return self.b[idx], self.a[idx]

    def inverse(self) -> "CharacterType":
        return CharacterType(self.embeddings, tuple(-x for x in self.a), tuple(-x for x in self.b))

    def conjugate(self) -> "CharacterType":
        return CharacterType(self.embeddings, self.b, self.a)

    def __mul__(self, other: "CharacterType") -> "CharacterType":
        check_same(self.embeddings, other.embeddings)
        return CharacterType(
            self.embeddings,
            tuple(x + y for x, y in zip(self.a, other.a)),
            tuple(x + y for x, y in zip(self.b, other.b)),
        )

    def __pow__(self, k: int) -> "CharacterType":
        return CharacterType(self.embeddings, tuple(x * k for x in self.a), tuple(x * k for x in self.b))

    @property
    def is_conjugate_self_dual(self) -> bool:
        """b = −a everywhere with integral exponents."""
        return all(x == -y and x.is_integral for x, y in zip(self.a, self.b))

    @property
    def is_algebraic(self) -> bool:
        return all(x.is_integral and y.is_integral for x, y in zip(self.a, self.b))

    def pullback(self, restriction: Restriction) -> "CharacterType":
        """Type of η∘N on the source field."""
        check_same(self.embeddings, restriction.target)
        source = restriction.source
        return CharacterType(
            source,
            tuple(self.at(restriction(label))[0] for label in source.labels),
            tuple(self.at(restriction(label))[1] for label in source.labels),
        )

    def as_infinity_type(self) -> "InfinityType":
        """The character viewed as a representation of GL_1."""
        return InfinityType(self.embeddings, 1, self.omega, tuple((x,) for x in self.a))

    def key(self) -> str:
        parts = ",".join(
            f"{label}:({x},{y})" for label, x, y in zip(self.embeddings.labels, self.a, self.b)
        )
        return f"{self.embeddings.name}[{parts}]"


@dataclass(frozen=True)
class InfinityType:
    """Exponents a_1(σ) > … > a_n(σ) and weight ω of a representation of GL_n."""

    embeddings: EmbeddingSet
    n: int
    weight: HalfInt
    exps: Tuple[Tuple[HalfInt, ...], ...]

    @classmethod
    def create(
        cls,
        embeddings: EmbeddingSet,
        exps: Mapping[str, Sequence[HalfIntLike]],
        weight: HalfIntLike = 0,
    ) -> "InfinityType":
        rows = []
        for label in embeddings.labels:
            if label not in exps:
                raise ValidationError(f"Infinity type misses place {label!r}")
            rows.append(tuple(HalfInt.of(x) for x in exps[label]))
        lengths = {len(row) for row in rows}
        if len(lengths) != 1 or 0 in lengths:
            raise ValidationError(f"Exponent lists must share a positive length, got {sorted(lengths)}")
        return cls(embeddings=embeddings, n=lengths.pop(), weight=HalfInt.of(weight), exps=tuple(rows))

    @classmethod
    def uniform(
        cls, embeddings: EmbeddingSet, exps: Sequence[HalfIntLike], weight: HalfIntLike = 0
    ) -> "InfinityType":
        return cls.create(embeddings, {label: exps for label in embeddings.labels}, weight)

    def at(self, place: str) -> Tuple[HalfInt, ...]:
        """Exponents at a place; at σ̄ these are −ω − a_{n+1−i}(σ)."""
        if self.embeddings.is_upper(place):
            return self.exps[self.embeddings.index(place)]
        row = self.exps[self.embeddings.index(self.embeddings.conj(place))]
        return tuple(-self.weight - x for x in reversed(row))

    def validate(self) -> List[str]:
        violations: List[str] = []
        offset = lattice_offset(self.n)
        if not self.weight.is_integral:
            violations.append(f"algebraicity: weight {self.weight} is not an integer")
        for label, row in zip(self.embeddings.labels, self.exps):
            for left, right in zip(row, row[1:]):
                if not left > right:
                    violations.append(f"strict decrease at {label}: {left} then {right}")
            off = [str(x) for x in row if not on_lattice(x, offset)]
            if off:
                violations.append(
                    f"algebraicity at {label}: {', '.join(off)} not in Z+{offset}"
                )
        return violations

    def require_valid(self) -> "InfinityType":
        violations = self.validate()
        if violations:
            raise ValidationError("Invalid infinity type", violations)
        return self

    def is_strictly_decreasing(self) -> bool:
        return all(all(x > y for x, y in zip(row, row[1:])) for row in self.exps)

    def is_n_regular(self, bound: int) -> bool:
        return all(
            (x - y).doubled >= 2 * bound for row in self.exps for x, y in zip(row, row[1:])
        )

    def dual(self) -> "InfinityType":
        rows = tuple(tuple(-x for x in reversed(row)) for row in self.exps)
        return InfinityType(self.embeddings, self.n, -self.weight, rows)

    def conjugate(self) -> "InfinityType":
        rows = tuple(tuple(-self.weight - x for x in reversed(row)) for row in self.exps)
        return InfinityType(self.embeddings, self.n, self.weight, rows)

    def twist(self, eta: CharacterType) -> "InfinityType":
        check_same(self.embeddings, eta.embeddings)
        rows = tuple(tuple(x + shift for x in row) for row, shift in zip(self.exps, eta.a))
        return InfinityType(self.embeddings, self.n, self.weight + eta.omega, rows)

    def is_conjugate_self_dual(self) -> bool:
        return self.conjugate() == self.dual()

    def key(self) -> str:
        """Canonical id used for archimedean symbols."""
        rows = "|".join(
            f"{label}:" + ",".join(str(x) for x in row)
            for label, row in zip(self.embeddings.labels, self.exps)
        )
        return f"{self.embeddings.name}[{rows};w={self.weight}]"


def direct_sum(parts: Sequence[InfinityType]) -> InfinityType:
    """Infinity type of an isobaric sum; parts must share weight and embeddings."""
    first = parts[0]
    for part in parts[1:]:
        check_same(first.embeddings, part.embeddings)
        if part.weight != first.weight:
            raise ValidationError(
                f"Isobaric parts must share a weight, got {first.weight} and {part.weight}"
            )
    rows = tuple(
        tuple(sorted((x for part in parts for x in part.exps[idx]), reverse=True))
        for idx in range(first.embeddings.d)
    )
    return InfinityType(first.embeddings, sum(part.n for part in parts), first.weight, rows)


def validate(t: InfinityType) -> List[str]:
    return t.validate()


def is_n_regular(t: InfinityType, bound: int) -> bool:
    return t.is_n_regular(bound)


def dual(t: InfinityType) -> InfinityType:
    return t.dual()


def conjugate(t: InfinityType) -> InfinityType:
    return t.conjugate()


def twist(t: InfinityType, eta: CharacterType) -> InfinityType:
    return t.twist(eta)


def is_conjugate_self_dual(t: InfinityType) -> bool:
    return t.is_conjugate_self_dual()
