"""Column reduction and the linear algebra built on it."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..errors import DimensionError, SingularMapError
from .field import Scalar
from .sparse import SparseMatrix, Vector, vec_axpy, vec_from_dense, vec_to_dense

logger = logging.getLogger(__name__)


@dataclass
class ReductionResult:
    """Output of `column_reduce`: reduced = matrix @ change_of_basis."""

    reduced: SparseMatrix
    change_of_basis: SparseMatrix
    pivots: List[Tuple[int, int]]
    row_rank: Dict[int, int]

    @property
    def pivot_of_column(self) -> Dict[int, int]:
        return {c: r for r, c in self.pivots}

    @property
    def column_of_pivot(self) -> Dict[int, int]:
        return {r: c for r, c in self.pivots}

    def zero_columns(self) -> List[int]:
        return [j for j in range(self.reduced.cols) if not self.reduced._columns[j]]


def _leading(col: Vector, row_rank: Dict[int, int]) -> int:
    return max(col, key=row_rank.__getitem__)


def column_reduce(m: SparseMatrix,
                  column_order: Optional[Sequence[int]] = None,
                  row_order: Optional[Sequence[int]] = None) -> ReductionResult:
    """
    Reduce the columns of m so that nonzero columns have distinct pivots.

    Columns are processed in `column_order`; each column only has earlier
    columns added to it, so the change of basis is upper-triangular with
    unit diagonal with respect to that order. The pivot of a column is its
    maximal nonzero row under `row_order` (listed from lowest to highest).

    Args:
        m: Matrix to reduce
        column_order: Processing order of the columns (default: natural)
        row_order: Total order on rows, lowest first (default: natural)

    Returns:
        ReductionResult with the reduced matrix, the change of basis and the
        (row, col) pivots listed in column order
    """
    field = m.field
    cols = list(range(m.cols)) if column_order is None else list(column_order)
    rows = list(range(m.rows)) if row_order is None else list(row_order)
    if sorted(cols) != list(range(m.cols)):
        raise DimensionError("column_order must be a permutation of the columns")
    if sorted(rows) != list(range(m.rows)):
        raise DimensionError("row_order must be a permutation of the rows")
    row_rank = {r: i for i, r in enumerate(rows)}

    reduced: List[Vector] = [m.column(j) for j in range(m.cols)]
    change: List[Vector] = [{j: field.one} for j in range(m.cols)]
    owner: Dict[int, int] = {}
    pivots: List[Tuple[int, int]] = []

    for j in cols:
        r_j = reduced[j]
        v_j = change[j]
        while r_j:
            piv = _leading(r_j, row_rank)
            i = owner.get(piv)
            if i is None:
                owner[piv] = j
                pivots.append((piv, j))
                break
            c = field.div(r_j[piv], reduced[i][piv])
            r_j = vec_axpy(field, r_j, field.neg(c), reduced[i])
            v_j = vec_axpy(field, v_j, field.neg(c), change[i])
        reduced[j] = r_j
        change[j] = v_j

    logger.debug("reduced %r: %d pivots", m, len(pivots))
    return ReductionResult(
        reduced=SparseMatrix(m.rows, m.cols, field, reduced),
        change_of_basis=SparseMatrix(m.cols, m.cols, field, change),
        pivots=pivots,
        row_rank=row_rank,
    )


def rank(m: SparseMatrix) -> int:
    """Rank of m over its field."""
    return len(column_reduce(m).pivots)


def _as_vector(m: SparseMatrix, b: Union[Vector, Sequence[Scalar]]) -> Vector:
    if isinstance(b, dict):
        if any(not 0 <= i < m.rows for i in b):
            raise DimensionError("right-hand side index out of range")
        return {i: m.field.coerce(v) for i, v in b.items() if not m.field.is_zero(m.field.coerce(v))}
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side has {len(b)} entries, matrix has {m.rows} rows")
    return vec_from_dense(m.field, b)


def reduce_against(result: ReductionResult, b: Vector) -> Tuple[Vector, Vector]:
    """
    Reduce b by the pivot columns of a reduction.

    Returns:
        (residual, coefficients) with b = matrix @ coefficients + residual,
        where no row of the residual is a pivot row
    """
    field = result.reduced.field
    owner = result.column_of_pivot
    x: Vector = {}
    residual: Vector = {}
    rem = dict(b)
    while rem:
        piv = _leading(rem, result.row_rank)
        i = owner.get(piv)
        if i is None:
            residual[piv] = rem.pop(piv)
            continue
        col = result.reduced._columns[i]
        c = field.div(rem[piv], col[piv])
        rem = vec_axpy(field, rem, field.neg(c), col)
        x = vec_axpy(field, x, c, result.change_of_basis._columns[i])
    return residual, x


def solve_in_span(m: SparseMatrix, b: Union[Vector, Sequence[Scalar]]) -> Optional[List[Scalar]]:
    """
    Solve m @ x = b.

    Args:
        m: Coefficient matrix
        b: Right-hand side, dense (length m.rows) or sparse

    Returns:
        A dense solution vector, or None when b is not in the column span
    """
    target = _as_vector(m, b)
    residual, x = reduce_against(column_reduce(m), target)
    if residual:
        return None
    return vec_to_dense(m.field, x, m.cols)


def kernel_basis(m: SparseMatrix) -> List[Vector]:
    """Basis of the null space of m, one sparse vector per zero reduced column."""
    result = column_reduce(m)
    return [result.change_of_basis.column(j) for j in result.zero_columns()]


def image_basis(m: SparseMatrix) -> List[Vector]:
    """Basis of the column span of m with distinct pivots."""
    result = column_reduce(m)
    return [result.reduced.column(c) for _, c in result.pivots]


def inverse(m: SparseMatrix) -> SparseMatrix:
    """Inverse of a square matrix; raises SingularMapError when singular."""
    if m.rows != m.cols:
        raise SingularMapError(f"non-square matrix {m.shape} has no inverse")
    result = column_reduce(m)
    if len(result.pivots) != m.cols:
        raise SingularMapError(f"matrix of rank {len(result.pivots)} < {m.cols} is singular")
    cols = []
    for i in range(m.rows):
        _, x = reduce_against(result, {i: m.field.one})
        cols.append(x)
    return SparseMatrix(m.cols, m.rows, m.field, cols)
