"""Split indices, sign maps and functoriality index maps."""

from .functoriality import ai_global_index, ai_local_index, bc_index
from .signs import SignMap, character_for_sign_map, galois_transport, sign_map
from .split import (
    SplitIndexVector,
    check_regular_pair,
    gap_positions,
    is_good_position,
    split_index_properties_check,
    split_index_table,
    split_indices,
)

__all__ = [
    "SignMap",
    "SplitIndexVector",
    "ai_global_index",
    "ai_local_index",
    "bc_index",
    "character_for_sign_map",
    "check_regular_pair",
    "galois_transport",
    "gap_positions",
    "is_good_position",
    "sign_map",
    "split_index_properties_check",
    "split_index_table",
    "split_indices",
]
