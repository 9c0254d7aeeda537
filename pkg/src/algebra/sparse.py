"""
Sparse vectors and matrices over an exact field.

A vector is a dict mapping index to nonzero scalar. A matrix keeps one
such dict per column, which is the access pattern of column reduction.
"""

from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import DimensionError
from .field import Field, Scalar

Vector = Dict[int, Scalar]


def vec_axpy(field: Field, y: Vector, a: Scalar, x: Vector) -> Vector:
    """Return y + a*x as a new vector."""
    out = dict(y)
    if field.is_zero(a):
        return out
    for i, xi in x.items():
        v = field.add(out.get(i, field.zero), field.mul(a, xi))
        if field.is_zero(v):
            out.pop(i, None)
        else:
            out[i] = v
    return out


def vec_scale(field: Field, a: Scalar, x: Vector) -> Vector:
    if field.is_zero(a):
        return {}
    return {i: field.mul(a, xi) for i, xi in x.items()}


def vec_from_dense(field: Field, values: Sequence) -> Vector:
    out = {}
    for i, v in enumerate(values):
        v = field.coerce(v)
        if not field.is_zero(v):
            out[i] = v
    return out


def vec_to_dense(field: Field, x: Vector, n: int) -> List[Scalar]:
    dense = [field.zero] * n
    for i, v in x.items():
        dense[i] = v
    return dense


class SparseMatrix:
    """A rows x cols matrix over `field`, stored column by column."""

    __slots__ = ("rows", "cols", "field", "_columns")

    def __init__(self, rows: int, cols: int, field: Field,
                 columns: Optional[List[Vector]] = None):
        """
        Initialize a sparse matrix.

        Args:
            rows: Number of rows
            cols: Number of columns
            field: Coefficient field
            columns: Optional list of `cols` sparse column vectors (zeros dropped)
        """
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.field = field
        if columns is None:
            self._columns: List[Vector] = [{} for _ in range(cols)]
        else:
            if len(columns) != cols:
                raise DimensionError(f"expected {cols} columns, got {len(columns)}")
            self._columns = []
            for col in columns:
                clean = {}
                for r, v in col.items():
                    if not 0 <= r < rows:
                        raise DimensionError(f"row {r} out of range for {rows} rows")
                    v = field.coerce(v)
                    if not field.is_zero(v):
                        clean[r] = v
                self._columns.append(clean)

    # Construction

    @classmethod
    def zero(cls, rows: int, cols: int, field: Field) -> "SparseMatrix":
        return cls(rows, cols, field)

    @classmethod
    def identity(cls, n: int, field: Field) -> "SparseMatrix":
        return cls(n, n, field, [{i: field.one} for i in range(n)])

    @classmethod
    def from_entries(cls, rows: int, cols: int, field: Field,
                     entries: Iterable[Tuple[int, int, Scalar]]) -> "SparseMatrix":
        """Build from (row, col, value) triplets; coordinates must be unique."""
        columns: List[Vector] = [{} for _ in range(cols)]
        for r, c, v in entries:
            if not 0 <= c < cols:
                raise DimensionError(f"column {c} out of range for {cols} columns")
            if r in columns[c]:
                raise DimensionError(f"duplicate entry at ({r}, {c})")
            columns[c][r] = v
        return cls(rows, cols, field, columns)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field,
                  cols: Optional[int] = None) -> "SparseMatrix":
        """Build from a dense list of rows."""
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else (cols or 0)
        columns: List[Vector] = [{} for _ in range(n_cols)]
        for r, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionError("ragged rows")
            for c, v in enumerate(row):
                columns[c][r] = v
        return cls(n_rows, n_cols, field, columns)

    @classmethod
    def from_columns(cls, rows: int, field: Field, columns: Sequence[Vector]) -> "SparseMatrix":
        return cls(rows, len(columns), field, [dict(c) for c in columns])

    # Access

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> Vector:
        return dict(self._columns[j])

    def columns(self) -> Iterator[Vector]:
        for col in self._columns:
            yield dict(col)

    def get(self, r: int, c: int) -> Scalar:
        return self._columns[c].get(r, self.field.zero)

    def entries(self) -> List[Tuple[int, int, Scalar]]:
        """Nonzero entries sorted by (col, row)."""
        return [(r, c, v) for c, col in enumerate(self._columns) for r, v in sorted(col.items())]

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self._columns)

    def is_zero(self) -> bool:
        return all(not col for col in self._columns)

    # Arithmetic

    def _check(self, other: "SparseMatrix") -> None:
        self.field.check_same(other.field)

    def apply(self, x: Vector) -> Vector:
        """Matrix times sparse vector."""
        out: Vector = {}
        for j, xj in x.items():
            if j >= self.cols:
                raise DimensionError(f"vector index {j} out of range for {self.cols} columns")
            out = vec_axpy(self.field, out, xj, self._columns[j])
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        return SparseMatrix(self.rows, other.cols, self.field,
                            [self.apply(col) for col in other._columns])

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.axpy(self.field.one, other)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.axpy(self.field.neg(self.field.one), other)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(self.field.neg(self.field.one))

    def axpy(self, a: Scalar, other: "SparseMatrix") -> "SparseMatrix":
        """self + a*other."""
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        cols = [vec_axpy(self.field, x, a, y) for x, y in zip(self._columns, other._columns)]
        return SparseMatrix(self.rows, self.cols, self.field, cols)

    def scale(self, a: Scalar) -> "SparseMatrix":
        a = self.field.coerce(a)
        return SparseMatrix(self.rows, self.cols, self.field,
                            [vec_scale(self.field, a, col) for col in self._columns])

    def transpose(self) -> "SparseMatrix":
        cols: List[Vector] = [{} for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                cols[r][c] = v
        return SparseMatrix(self.cols, self.rows, self.field, cols)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "SparseMatrix":
        """Rows and columns picked (and renumbered) by the given index lists."""
        pos = {r: i for i, r in enumerate(row_idx)}
        cols = []
        for c in col_idx:
            cols.append({pos[r]: v for r, v in self._columns[c].items() if r in pos})
        return SparseMatrix(len(row_idx), len(col_idx), self.field, cols)

    def hstack(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return SparseMatrix(self.rows, self.cols + other.cols, self.field,
                            [dict(c) for c in self._columns] + [dict(c) for c in other._columns])

    def vstack(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        cols = []
        for a, b in zip(self._columns, other._columns):
            col = dict(a)
            col.update({r + self.rows: v for r, v in b.items()})
            cols.append(col)
        return SparseMatrix(self.rows + other.rows, self.cols, self.field, cols)

    @classmethod
    def block(cls, blocks: Sequence[Sequence[Optional["SparseMatrix"]]],
              row_sizes: Sequence[int], col_sizes: Sequence[int], field: Field) -> "SparseMatrix":
        """Assemble a block matrix; None blocks are zero."""
        row_off = [sum(row_sizes[:i]) for i in range(len(row_sizes))]
        col_off = [sum(col_sizes[:j]) for j in range(len(col_sizes))]
        cols: List[Vector] = [{} for _ in range(sum(col_sizes))]
        for i, brow in enumerate(blocks):
            for j, b in enumerate(brow):
                if b is None:
                    continue
                if b.shape != (row_sizes[i], col_sizes[j]):
                    raise DimensionError(f"block ({i},{j}) has shape {b.shape}, "
                                         f"expected {(row_sizes[i], col_sizes[j])}")
                field.check_same(b.field)
                for c, col in enumerate(b._columns):
                    target = cols[col_off[j] + c]
                    for r, v in col.items():
                        target[row_off[i] + r] = v
        return cls(sum(row_sizes), sum(col_sizes), field, cols)

    def to_rows(self) -> List[List[Scalar]]:
        dense = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                dense[r][c] = v
        return dense

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.field == other.field
                and self._columns == other._columns)

    __hash__ = None

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols} over {self.field.name}, nnz={self.nnz})"
