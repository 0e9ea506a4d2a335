"""Critical sets for motives, characters, automorphic pairs and (π, χ, α) triples."""

from .sets import (
    CriticalSet,
    HodgeTypeList,
    critical_set_character,
    critical_set_motive,
    critical_set_pair,
    critical_set_pair_via_motive,
    is_critical_pair,
    motive_hodge_data,
    motivic_triple_critical,
    tensor_hodge_data,
)

__all__ = [
    "CriticalSet",
    "HodgeTypeList",
    "critical_set_character",
    "critical_set_motive",
    "critical_set_pair",
    "critical_set_pair_via_motive",
    "is_critical_pair",
    "motive_hodge_data",
    "motivic_triple_critical",
    "tensor_hodge_data",
]
