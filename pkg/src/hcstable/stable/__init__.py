"""
Stable multiplicity module for hcstable.
"""

from .multiplicity import (
    FamilyInstance,
    HomFamily,
    InvalidFamily,
    InvalidInstance,
    StabilityReport,
    StabilityRow,
    StableError,
    finite_hom_multiplicity_gl,
    instantiate_family,
    king_multiplicity,
    king_stable_range,
    mixed_stable_multiplicity,
    stable_hom_multiplicity_gl,
    stable_hom_multiplicity_osp,
    stable_instance,
    verify_stability,
)

__all__ = [
    "FamilyInstance",
    "HomFamily",
    "InvalidFamily",
    "InvalidInstance",
    "StabilityReport",
    "StabilityRow",
    "StableError",
    "finite_hom_multiplicity_gl",
    "instantiate_family",
    "king_multiplicity",
    "king_stable_range",
    "mixed_stable_multiplicity",
    "stable_hom_multiplicity_gl",
    "stable_hom_multiplicity_osp",
    "stable_instance",
    "verify_stability",
]
