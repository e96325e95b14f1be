"""
Central character module for hcstable.
"""

from .characters import (
    CentralCharacter,
    FormalCut,
    OddIndexForOsp,
    SeriesMismatch,
    char_of_bipartition_by_additivity,
    char_of_bipartition_gl,
    char_of_triple_gl,
    char_osp,
    char_pair_of_hom,
    char_pair_of_hom_osp,
    ck_value,
    evaluate_ck,
    finite_ck_value,
    q_number_term,
    t_value,
    transpose_identity_check,
)
from .compat import HCDecomposition, Incompatible, hc_compatibility
from .exponents import AffineExponent, CentralCharError, ExponentialSum, ExponentParseError
from ..oracle import NonDominant

__all__ = [
    "AffineExponent",
    "CentralCharError",
    "CentralCharacter",
    "ExponentParseError",
    "ExponentialSum",
    "FormalCut",
    "HCDecomposition",
    "Incompatible",
    "NonDominant",
    "OddIndexForOsp",
    "SeriesMismatch",
    "char_of_bipartition_by_additivity",
    "char_of_bipartition_gl",
    "char_of_triple_gl",
    "char_osp",
    "char_pair_of_hom",
    "char_pair_of_hom_osp",
    "ck_value",
    "evaluate_ck",
    "finite_ck_value",
    "hc_compatibility",
    "q_number_term",
    "t_value",
    "transpose_identity_check",
]
