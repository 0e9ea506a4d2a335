"""Period monomials: sparse exponent vectors over period symbols."""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from .symbols import TWO_PI_I, PeriodSymbol


@dataclass(frozen=True)
class PeriodMonomial:
    """Π symbol^exponent, stored sorted with no zero exponents."""

    exps: Tuple[Tuple[PeriodSymbol, int], ...] = ()

    @classmethod
    def of(cls, exps: Mapping[PeriodSymbol, int]) -> "PeriodMonomial":
        return cls(tuple(sorted((s, int(e)) for s, e in exps.items() if e)))

    @classmethod
    def atom(cls, symbol: PeriodSymbol, exp: int = 1) -> "PeriodMonomial":
        return cls.of({symbol: exp})

    @classmethod
    def product(cls, factors: Iterable["PeriodMonomial"]) -> "PeriodMonomial":
        total: Dict[PeriodSymbol, int] = {}
        for factor in factors:
            for symbol, exp in factor.exps:
                total[symbol] = total.get(symbol, 0) + exp
        return cls.of(total)

    def as_dict(self) -> Dict[PeriodSymbol, int]:
        return dict(self.exps)

    def exponent(self, symbol: PeriodSymbol) -> int:
        return self.as_dict().get(symbol, 0)

    def symbols(self) -> List[PeriodSymbol]:
        return [s for s, _ in self.exps]

    def __iter__(self) -> Iterator[Tuple[PeriodSymbol, int]]:
        return iter(self.exps)

    def __bool__(self) -> bool:
        return bool(self.exps)

    def __mul__(self, other: "PeriodMonomial") -> "PeriodMonomial":
        return PeriodMonomial.product((self, other))

    def __truediv__(self, other: "PeriodMonomial") -> "PeriodMonomial":
        return PeriodMonomial.product((self, other.inverse()))

    def __pow__(self, k: int) -> "PeriodMonomial":
        return PeriodMonomial.of({s: e * k for s, e in self.exps})

    def inverse(self) -> "PeriodMonomial":
        return self ** -1

    def without(self, symbol: PeriodSymbol) -> "PeriodMonomial":
        return PeriodMonomial(tuple((s, e) for s, e in self.exps if s != symbol))

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return " · ".join(str(s) if e == 1 else f"{s}^{e}" for s, e in self.exps)

    def to_json(self) -> List[dict]:
        return [{"symbol": s.to_json(), "exp": e} for s, e in self.exps]

    @classmethod
    def from_json(cls, payload: List[dict]) -> "PeriodMonomial":
        total: Dict[PeriodSymbol, int] = {}
        for entry in payload:
            symbol = PeriodSymbol.from_json(entry["symbol"])
            total[symbol] = total.get(symbol, 0) + int(entry["exp"])
        return cls.of(total)


ONE = PeriodMonomial()


def two_pi_i(exp: int = 1) -> PeriodMonomial:
    return PeriodMonomial.atom(TWO_PI_I, exp)


def mono_mul(a: PeriodMonomial, b: PeriodMonomial) -> PeriodMonomial:
    return a * b


def mono_pow(a: PeriodMonomial, k: int) -> PeriodMonomial:
    return a ** k


def mono_inv(a: PeriodMonomial) -> PeriodMonomial:
    return a.inverse()
