"""The formal period algebra: symbols, monomials, the relation lattice and built-in relations."""

from .lattice import Relation, RelationLattice, add_relation, equivalent
from .monomial import ONE, PeriodMonomial, mono_inv, mono_mul, mono_pow, two_pi_i
from .registry import CharacterDecl, CharacterRegistry, Representation
from .relations import (
    blasius_cm_type,
    blasius_monomial,
    cm,
    cm_relation_pack,
    register_relations,
)
from .symbols import TWO_PI_I, PeriodSymbol, SymbolKind

__all__ = [
    "ONE",
    "TWO_PI_I",
    "CharacterDecl",
    "CharacterRegistry",
    "PeriodMonomial",
    "PeriodSymbol",
    "Relation",
    "RelationLattice",
    "Representation",
    "SymbolKind",
    "add_relation",
    "blasius_cm_type",
    "blasius_monomial",
    "cm",
    "cm_relation_pack",
    "equivalent",
    "mono_inv",
    "mono_mul",
    "mono_pow",
    "register_relations",
    "two_pi_i",
]
