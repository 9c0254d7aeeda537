from .field import Field, PrimeField, Rationals, QQ, Scalar, field_from_name
from .sparse import SparseMatrix, Vector, vec_axpy, vec_scale, vec_from_dense, vec_to_dense
from .reduction import (
    ReductionResult,
    column_reduce,
    rank,
    reduce_against,
    solve_in_span,
    kernel_basis,
    image_basis,
    inverse,
)

__all__ = [
    "Field",
    "PrimeField",
    "Rationals",
    "QQ",
    "Scalar",
    "field_from_name",
    "SparseMatrix",
    "Vector",
    "vec_axpy",
    "vec_scale",
    "vec_from_dense",
    "vec_to_dense",
    "ReductionResult",
    "column_reduce",
    "rank",
    "reduce_against",
    "solve_in_span",
    "kernel_basis",
    "image_basis",
    "inverse",
]
