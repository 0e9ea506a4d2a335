"""Exact scalars, embedding sets and infinity types."""

from .embeddings import EmbeddingSet, Restriction
from .halfint import HALF, ONE, ZERO, HalfInt
from .types import (
    CharacterType,
    InfinityType,
    conjugate,
    direct_sum,
    dual,
    is_conjugate_self_dual,
    is_n_regular,
    twist,
    validate,
)

__all__ = [
    "HALF",
    "ONE",
    "ZERO",
    "CharacterType",
    "EmbeddingSet",
    "HalfInt",
    "InfinityType",
    "Restriction",
    "conjugate",
    "direct_sum",
    "dual",
    "is_conjugate_self_dual",
    "is_n_regular",
    "twist",
    "validate",
]
