"""Exchange-condition factorization and local arithmetic periods."""

from .arithmetic import (
    LocalFactorization,
    compact_value,
    conjugate_relations,
    essential_twist_relations,
    factorize_arithmetic_periods,
    galois_invariance_relations,
    global_local_relation,
    global_symbol,
    local,
    local_anchor_relations,
    local_product,
)
from .tables import Factorization, ProductTable, exchange_condition, exchange_witness, factorize

__all__ = [
    "Factorization",
    "LocalFactorization",
    "ProductTable",
    "compact_value",
    "conjugate_relations",
    "essential_twist_relations",
    "exchange_condition",
    "exchange_witness",
    "factorize",
    "factorize_arithmetic_periods",
    "galois_invariance_relations",
    "global_local_relation",
    "global_symbol",
    "local",
    "local_anchor_relations",
    "local_product",
]
