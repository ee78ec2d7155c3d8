"""Exact computations in the ring of SL_n x SL_n semi-invariants of m-tuples of n x n matrices."""

from .bounds import bound_report, gamma_value, lower_bound_witness, universal_upper_bound, upper_bound
from .characters import ClassVector, character_row, character_value
from .errors import (
    ConsistencyError,
    ContractError,
    InputFormatError,
    MatinvError,
    PartitionParseError,
    UnsupportedError,
)
from .graded import graded_dim, graded_dim_fast, graded_dim_oracle, schur_dim
from .hilbert import (
    HilbertReport,
    hilbert_numerator,
    krull_dim,
    numerator_degree,
    series_expand,
    unnormalized_series,
)
from .invariants import (
    MatrixTuple,
    PolynomialInT,
    act,
    chi_det,
    f_stacked,
    fundamental_polynomial,
    g_invariant,
    invariance_check,
    null_cone_test_3,
    random_special_linear,
)
from .kronecker import isotypic_decomposition, kronecker_coefficient, kronecker_row
from .partitions import (
    Partition,
    conjugate,
    irrep_dimension_symmetric,
    parse_partition,
    partitions_of,
    z_order,
)

__version__ = "0.1.0"
