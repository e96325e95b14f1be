"""
sl_Z module for hcstable.

Fock space, wedge powers of C^Z and their twists, and the Grothendieck
group of bimodules Hom(μ, λ) with μ fixed together with its isomorphism
onto a tensor product of those modules.
"""

from .family import (
    ActiveCoset,
    Block,
    FamilySpec,
    TupleIndex,
    active_cosets,
    base_index,
    coset_table,
    cosets_commute,
    grothendieck_e,
    grothendieck_f,
    intertwines,
    iso_map,
    iso_vector,
    random_tuple,
    resolve_coset,
    tensor_spec,
)
from .modules import (
    InactiveCoset,
    InvalidFamilySpec,
    InvalidIndex,
    ModuleSpec,
    SlzError,
    SparseVector,
    TensorProduct,
    apply_e,
    apply_f,
    bracket_check,
    cz_basis,
    fock_basis,
    h_eigenvalue,
    index_key,
    parse_module_spec,
    sequence_to_wedge,
    wedge_basis,
    wedge_to_sequence,
)

__all__ = [
    "ActiveCoset",
    "Block",
    "FamilySpec",
    "InactiveCoset",
    "InvalidFamilySpec",
    "InvalidIndex",
    "ModuleSpec",
    "SlzError",
    "SparseVector",
    "TensorProduct",
    "TupleIndex",
    "active_cosets",
    "apply_e",
    "apply_f",
    "base_index",
    "bracket_check",
    "coset_table",
    "cosets_commute",
    "cz_basis",
    "fock_basis",
    "grothendieck_e",
    "grothendieck_f",
    "h_eigenvalue",
    "index_key",
    "intertwines",
    "iso_map",
    "iso_vector",
    "parse_module_spec",
    "random_tuple",
    "resolve_coset",
    "sequence_to_wedge",
    "tensor_spec",
    "wedge_basis",
    "wedge_to_sequence",
]
