"""Exact half-integer scalars stored as doubled integers."""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

from ..errors import NonIntegralExponentError, ValidationError

HalfIntLike = Union["HalfInt", int, Fraction, str]


@total_ordering
@dataclass(frozen=True, eq=False)
class HalfInt:
    """A value in (1/2)ℤ; ``doubled`` holds twice the value."""

    doubled: int

    @classmethod
    def of(cls, value: HalfIntLike) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise ValidationError(f"Refusing boolean {value!r} as a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, float):
            raise ValidationError(f"Refusing float {value!r}; use a fraction string")
        try:
            frac = Fraction(value) if isinstance(value, (str, Rational)) else None
        except (ValueError, ZeroDivisionError) as err:
            raise ValidationError(f"Cannot parse {value!r} as a half-integer") from err
        if frac is None:
            raise ValidationError(f"Unsupported half-integer value {value!r}")
        doubled = 2 * frac
        if doubled.denominator != 1:
            raise ValidationError(f"{value!r} is not a half-integer")
        return cls(int(doubled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    @property
    def is_integral(self) -> bool:
        return self.doubled % 2 == 0

    def to_int(self) -> int:
        if not self.is_integral:
            raise NonIntegralExponentError(f"{self} is not an integer")
        return self.doubled // 2

    def __add__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    __radd__ = __add__

    def __sub__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __rsub__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(HalfInt.of(other).doubled - self.doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __mul__(self, k: int) -> "HalfInt":
        if not isinstance(k, int):
            return NotImplemented
        return HalfInt(self.doubled * k)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.doubled == other.doubled
        if isinstance(other, int) and not isinstance(other, bool):
            return self.doubled == 2 * other
        if isinstance(other, Fraction):
            return self.value == other
        return NotImplemented

    def __lt__(self, other: HalfIntLike) -> bool:
        if isinstance(other, Fraction):
            return self.value < other
        return self.doubled < HalfInt.of(other).doubled

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


def on_lattice(x: HalfInt, offset: HalfInt) -> bool:
    """True iff x ∈ ℤ + offset."""
    return (x.doubled - offset.doubled) % 2 == 0


def lattice_offset(n: int) -> HalfInt:
    """The offset of ℤ + (n−1)/2 reduced to {0, 1/2}."""
    return HalfInt((n - 1) % 2)
