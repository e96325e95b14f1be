"""
Young-diagram combinatorics for hcstable.
"""

from .core import (
    Bipartition,
    Cell,
    CutDecomposition,
    CutTooDeep,
    InvalidPartition,
    InvalidTriple,
    NotContained,
    Partition,
    PartitionError,
    RankTooSmall,
    SkewShape,
    add_cell,
    addable_cells,
    assemble,
    bipartition_weight,
    conjugate,
    cut,
    gl_weight_to_bipartition,
    intersection,
    partitions_of,
    partitions_up_to,
    random_partition,
    remove_cell,
    removable_cells,
    subpartitions,
)

__all__ = [
    "Bipartition",
    "Cell",
    "CutDecomposition",
    "CutTooDeep",
    "InvalidPartition",
    "InvalidTriple",
    "NotContained",
    "Partition",
    "PartitionError",
    "RankTooSmall",
    "SkewShape",
    "add_cell",
    "addable_cells",
    "assemble",
    "bipartition_weight",
    "conjugate",
    "cut",
    "gl_weight_to_bipartition",
    "intersection",
    "partitions_of",
    "partitions_up_to",
    "random_partition",
    "remove_cell",
    "removable_cells",
    "subpartitions",
]
