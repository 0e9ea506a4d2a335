"""Exception hierarchy shared by every pcalc module."""

from typing import Any, List, Optional, Sequence


class PcalcError(Exception):
    """Base class for all pcalc errors."""


class ValidationError(PcalcError):
    def __init__(self, message: str, violations: Optional[Sequence[str]] = None):
        super().__init__(message)
        self.violations: List[str] = list(violations or [])


class EmbeddingMismatchError(ValidationError):
    """Two objects live over different embedding sets."""


class CollisionError(PcalcError):
    """An exponent sum hits the centre of symmetry; no critical points exist."""


class TieError(PcalcError):
    """Two exponents over the same place coincide."""


class FiberError(PcalcError):
    """A restriction map does not have fibres of the expected size."""


class MiddleClassError(PcalcError):
    """A Hodge list has a class on the middle line."""


class NonCriticalError(PcalcError):
    """The evaluation point is not critical."""


class BoundExceededError(PcalcError):
    """An enumeration would exceed the configured bound."""


class ParityError(PcalcError):
    """Parity data is inconsistent (Hodge parity, case letters, lattices)."""


class RangeError(PcalcError):
    """An index is outside its allowed range."""


class NonIntegralExponentError(PcalcError):
    """A power of 2πi came out fractional."""


class CharacterArithmeticError(PcalcError):
    """Declared character arithmetic contradicts the infinity types."""


class LatticeSealedError(PcalcError):
    """A relation was added to a sealed lattice."""


class ExchangeFailure(PcalcError):
    """A product table violates the exchange condition."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class AnchorError(PcalcError):
    """Anchors are inconsistent with the table they pin down."""


class MissingFactorizationError(PcalcError):
    """A representation has no registered local periods."""


class DictionaryGapError(PcalcError):
    """A symbol has no counterpart in the automorphic/motivic dictionary."""


class PlacementError(PcalcError):
    """Auxiliary characters cannot be placed in the free gaps."""


class RegularityError(PcalcError):
    """A regularity hypothesis (good position, very regular) fails."""


class ProblemFileError(PcalcError):
    """A problem file cannot be parsed or validated."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
