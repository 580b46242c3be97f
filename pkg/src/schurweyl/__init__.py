"""Exact construction of the Schur-Weyl transform for spin chains.

The package converts the product basis of an N-node chain with n states per
node into the irreducible (lambda, t, y) basis of Schur-Weyl duality.  Matrix
elements are computed in exact radical arithmetic by summing interference
amplitudes over letter-insertion paths through Gelfand-Tsetlin patterns.
"""

from .radicals import RadicalSum, SignedRadical, squarefree_split
from .tableaux import (
    Configuration,
    Partition,
    StandardTableau,
    SystemShape,
    WeightVector,
    WeylTableau,
    chain_from_syt,
    content,
    dim_symmetric,
    dim_unitary,
    enumerate_partitions,
    enumerate_sswt,
    enumerate_syt,
    rsk,
    weight,
)
from .gt_patterns import GTPattern, ShiftVector, from_weyl, insert_letter, to_weyl
from .pattern_calculus import fundamental_element
from .insertion_graph import (
    Edge,
    InsertionGraph,
    amplitude,
    amplitude_from_paths,
    build_graph,
    count_paths,
    iter_paths,
    path_count,
)
from .transform import (
    DEFAULT_SIZE_CAP,
    ColumnKey,
    SchurWeylMatrix,
    SizeCapExceeded,
    apply_forward,
    apply_inverse,
    assemble,
    census,
    check_coxeter,
    check_permutation_blocks,
    check_selection_rule,
    check_torus_action,
    check_unitarity,
    conjugated_transposition,
)
from .estimator import SchurWeylTransform

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "ColumnKey",
    "DEFAULT_SIZE_CAP",
    "Edge",
    "GTPattern",
    "InsertionGraph",
    "Partition",
    "RadicalSum",
    "SchurWeylMatrix",
    "SchurWeylTransform",
    "ShiftVector",
    "SignedRadical",
    "SizeCapExceeded",
    "StandardTableau",
    "SystemShape",
    "WeightVector",
    "WeylTableau",
    "amplitude",
    "amplitude_from_paths",
    "apply_forward",
    "apply_inverse",
    "assemble",
    "build_graph",
    "census",
    "chain_from_syt",
    "check_coxeter",
    "check_permutation_blocks",
    "check_selection_rule",
    "check_torus_action",
    "check_unitarity",
    "conjugated_transposition",
    "content",
    "count_paths",
    "dim_symmetric",
    "dim_unitary",
    "enumerate_partitions",
    "enumerate_sswt",
    "enumerate_syt",
    "from_weyl",
    "fundamental_element",
    "insert_letter",
    "iter_paths",
    "path_count",
    "rsk",
    "squarefree_split",
    "to_weyl",
    "weight",
]
