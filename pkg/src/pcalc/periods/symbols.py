"""Period symbols: opaque atoms of the period algebra."""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

from ..core.halfint import HalfInt, HalfIntLike
from ..errors import RangeError


class SymbolKind(str, Enum):
    TWO_PI_I = "TWO_PI_I"
    CM_PERIOD = "CM_PERIOD"
    LOCAL_PERIOD = "LOCAL_PERIOD"
    GLOBAL_PERIOD = "GLOBAL_PERIOD"
    WHITTAKER = "WHITTAKER"
    ARCH_OMEGA = "ARCH_OMEGA"
    ARCH_Z = "ARCH_Z"
    ARCH_P = "ARCH_P"
    MOTIVIC_Q = "MOTIVIC_Q"
    MOTIVIC_DELTA = "MOTIVIC_DELTA"
    MOTIVIC_QJ = "MOTIVIC_QJ"
    L_VALUE = "L_VALUE"


_TEMPLATES = {
    SymbolKind.TWO_PI_I: "2πi",
    SymbolKind.CM_PERIOD: "p({0}ˇ,{1})",
    SymbolKind.LOCAL_PERIOD: "P^({2})({0},{1})",
    SymbolKind.GLOBAL_PERIOD: "P^({1})({0})",
    SymbolKind.WHITTAKER: "p({0})",
    SymbolKind.ARCH_OMEGA: "Ω_({1})({0})",
    SymbolKind.ARCH_Z: "Z({0})",
    SymbolKind.ARCH_P: "p({0},{1},{2})",
    SymbolKind.MOTIVIC_Q: "Q_{1}({0},{2})",
    SymbolKind.MOTIVIC_DELTA: "δ({0},{1})",
    SymbolKind.MOTIVIC_QJ: "Q^({1})({0},{2})",
    SymbolKind.L_VALUE: "L({1},{0})",
}


@dataclass(frozen=True, order=True)
class PeriodSymbol:
    kind: SymbolKind
    args: Tuple[str, ...] = ()

    def __str__(self) -> str:
        return _TEMPLATES[self.kind].format(*self.args)

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "args": list(self.args)}

    @classmethod
    def from_json(cls, payload: dict) -> "PeriodSymbol":
        return cls(SymbolKind(payload["kind"]), tuple(str(a) for a in payload.get("args", ())))


TWO_PI_I = PeriodSymbol(SymbolKind.TWO_PI_I)


def cm_period(character: str, place: str) -> PeriodSymbol:
    """p(χ̌, place)."""
    return PeriodSymbol(SymbolKind.CM_PERIOD, (character, place))


def local_period(rep: str, place: str, s: int, n: int) -> PeriodSymbol:
    if not 0 <= s <= n:
        raise RangeError(f"Local period index {s} outside 0..{n} for {rep}")
    return PeriodSymbol(SymbolKind.LOCAL_PERIOD, (rep, place, str(s)))


def global_period(rep: str, sign_key: str) -> PeriodSymbol:
    return PeriodSymbol(SymbolKind.GLOBAL_PERIOD, (rep, sign_key))


def whittaker(rep: str) -> PeriodSymbol:
    return PeriodSymbol(SymbolKind.WHITTAKER, (rep,))


def arch_omega(infinity_key: str, partition: Sequence[int]) -> PeriodSymbol:
    return PeriodSymbol(SymbolKind.ARCH_OMEGA, (infinity_key, ",".join(str(p) for p in partition)))


def arch_z(infinity_key: str) -> PeriodSymbol:
    return PeriodSymbol(SymbolKind.ARCH_Z, (infinity_key,))


def arch_p(m: HalfIntLike, first: str, second: str) -> PeriodSymbol:
    return PeriodSymbol(SymbolKind.ARCH_P, (str(HalfInt.of(m)), first, second))


def motivic_q(motive: str, i: int, place: str, n: int) -> PeriodSymbol:
    if not 1 <= i <= n:
        raise RangeError(f"Q_{i} outside 1..{n} for {motive}")
    return PeriodSymbol(SymbolKind.MOTIVIC_Q, (motive, str(i), place))


def motivic_delta(motive: str, place: str) -> PeriodSymbol:
    return PeriodSymbol(SymbolKind.MOTIVIC_DELTA, (motive, place))


def motivic_qj(motive: str, j: int, place: str, n: int) -> PeriodSymbol:
    if not 0 <= j <= n:
        raise RangeError(f"Q^({j}) outside 0..{n} for {motive}")
    return PeriodSymbol(SymbolKind.MOTIVIC_QJ, (motive, str(j), place))


def l_value_label(*factors: str) -> str:
    """Canonical label of a Rankin–Selberg product; factor order is irrelevant."""
    return " x ".join(sorted(factors))


def l_value(label: str, s: HalfIntLike) -> PeriodSymbol:
    return PeriodSymbol(SymbolKind.L_VALUE, (label, str(HalfInt.of(s))))
