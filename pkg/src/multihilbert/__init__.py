"""Multigraded Hilbert functions of finite point sets in products of projective spaces."""

from .combinatorics import (
    BinaryMatrix,
    Partition,
    conjugate,
    delta,
    gale_ryser_feasible,
    majorizes,
    matrix_margins,
    ryser_construct,
)
from .errors import (
    ArityError,
    DuplicatePoint,
    EmptySet,
    Infeasible,
    MultiHilbertError,
    NotAProduct,
    NotSingleFactor,
    PointSyntaxError,
    SumMismatch,
    WrongAmbient,
    ZeroFactor,
    ZeroMargin,
)
from .exactlinalg import RationalMatrix, first_null_vector_not_orthogonal, independent_row_subset, nullspace, rank
from .hilbert import (
    Border,
    HilbertTable,
    border,
    evaluation_matrix,
    hilbert_query,
    hilbert_table,
    hilbert_value,
    separators,
    separators_pn,
    verify_properties,
)
from .monomials import MultiForm, basis_size, monomial_basis
from .p1p1 import (
    BorderPair,
    alpha_beta,
    border_from_partitions,
    classify_border,
    line_counts,
    witness_from_matrix,
    witness_from_partitions,
)
from .points import (
    MultiPoint,
    PointSet,
    fiber_partition,
    fibers,
    format_point_set,
    normalize,
    parse_point_set,
    point_ideal_generators,
    projection,
)

__version__ = "0.1.0"
