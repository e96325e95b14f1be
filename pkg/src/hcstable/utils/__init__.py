"""
Utility functions for hcstable: input grammar and output rendering.
"""

from .formats import (
    FORMATS,
    FormatError,
    Result,
    index_to_data,
    parse_bipartition,
    parse_family,
    parse_generator_values,
    parse_int_list,
    parse_module_index,
    parse_partition,
    parse_scalar_values,
    parse_slz_family,
    parse_triple,
    parse_tuple_index,
    render,
    vector_records,
    write_atomic,
)

__all__ = [
    "FORMATS",
    "FormatError",
    "Result",
    "index_to_data",
    "parse_bipartition",
    "parse_family",
    "parse_generator_values",
    "parse_int_list",
    "parse_module_index",
    "parse_partition",
    "parse_scalar_values",
    "parse_slz_family",
    "parse_triple",
    "parse_tuple_index",
    "render",
    "vector_records",
    "write_atomic",
]
