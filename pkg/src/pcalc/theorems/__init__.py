"""Formula builders and the end-to-end derivations of critical-value formulas."""

from .central_values import derive_central_value
from .conjecture import (
    cm_model_check,
    deligne_compatibility_check,
    main_conjecture_rhs,
    printed_range_note,
    sp_exponents,
)
from .critical_values import derive_critical_value, parity_case
from .functoriality import ai_relation_check, bc_relation_check
from .models import EQUIVALENT, MISMATCH, FormulaReport, MotiveHodgeData
from .motivic import deligne_period, motivic_local_period, regrouped_deligne_period
from .n_times_one import n_times_one_relations, rhs_n_times_one
from .whittaker import IsobaricPart, whittaker_formula, whittaker_langlands_sum

__all__ = [
    "EQUIVALENT",
    "MISMATCH",
    "FormulaReport",
    "IsobaricPart",
    "MotiveHodgeData",
    "ai_relation_check",
    "bc_relation_check",
    "cm_model_check",
    "deligne_compatibility_check",
    "deligne_period",
    "derive_central_value",
    "derive_critical_value",
    "main_conjecture_rhs",
    "motivic_local_period",
    "n_times_one_relations",
    "parity_case",
    "printed_range_note",
    "regrouped_deligne_period",
    "rhs_n_times_one",
    "sp_exponents",
    "whittaker_formula",
    "whittaker_langlands_sum",
]
