"""
Annihilator module for hcstable.

Operators in U(g), their action on tensor spaces and the supercommutative
symbol of annihilator minors.
"""

from .operators import (
    AlgebraType,
    AnnihilatorError,
    DimensionMismatch,
    Generator,
    IndexOutOfRange,
    OperatorExpr,
    OverlappingIndexSets,
    degree_bound,
    elementary_annihilator,
    minor,
    osp_statement_bound,
)
from .spaces import (
    AnnihilatorReport,
    Factor,
    ModuleSpace,
    apply,
    check_annihilates,
    entries_commute,
    find_witness,
    verify_elementary,
    verify_minor,
)
from .superalg import SuperPolynomial, nilradical_check, odd_variable_count, super_power, super_symbol

__all__ = [
    "AlgebraType",
    "AnnihilatorError",
    "AnnihilatorReport",
    "DimensionMismatch",
    "Factor",
    "Generator",
    "IndexOutOfRange",
    "ModuleSpace",
    "OperatorExpr",
    "OverlappingIndexSets",
    "SuperPolynomial",
    "apply",
    "check_annihilates",
    "degree_bound",
    "elementary_annihilator",
    "entries_commute",
    "find_witness",
    "minor",
    "nilradical_check",
    "odd_variable_count",
    "osp_statement_bound",
    "super_power",
    "super_symbol",
    "verify_elementary",
    "verify_minor",
]
