"""
Littlewood-Richardson module for hcstable.
"""

from .engine import (
    CompositeShape,
    LRError,
    NotContained,
    SchurExpansion,
    cache_info,
    composite_expansion,
    composite_shape,
    lr_coefficient,
    lr_weight_count,
    schur_product,
    skew_pairing,
    skew_schur_expand,
    ssyt_count,
)

__all__ = [
    "CompositeShape",
    "LRError",
    "NotContained",
    "SchurExpansion",
    "cache_info",
    "composite_expansion",
    "composite_shape",
    "lr_coefficient",
    "lr_weight_count",
    "schur_product",
    "skew_pairing",
    "skew_schur_expand",
    "ssyt_count",
]
