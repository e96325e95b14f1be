"""
Finite-rank oracle for hcstable: weight multiplicities and tensor products
of gl_n, so_{2n+1} and sp_{2n}.
"""

from .weyl import (
    CharacterPoly,
    LieType,
    NonDominant,
    OracleError,
    RankCeilingExceeded,
    box_operator_eigenvalues,
    casimir2,
    dominant_weights,
    dual_hw,
    dual_weight,
    finite_hom_oracle,
    irr_character,
    is_dominant,
    restricted_multiplicity,
    tensor_decompose,
    weyl_dimension,
)

__all__ = [
    "CharacterPoly",
    "LieType",
    "NonDominant",
    "OracleError",
    "RankCeilingExceeded",
    "box_operator_eigenvalues",
    "casimir2",
    "dominant_weights",
    "dual_hw",
    "dual_weight",
    "finite_hom_oracle",
    "irr_character",
    "is_dominant",
    "restricted_multiplicity",
    "tensor_decompose",
    "weyl_dimension",
]
