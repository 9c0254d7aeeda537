"""Finite graded chain complexes, homology, mapping cones and shifts."""

from typing import Dict, List, Optional, Sequence

from ..algebra import (
    Field,
    SparseMatrix,
    Vector,
    column_reduce,
    image_basis,
    kernel_basis,
    rank,
    reduce_against,
)
from ..errors import ChainComplexError, DimensionError

ChainMap = Dict[int, SparseMatrix]


class Homology:
    """Homology in one degree: representative cycles and class coordinates."""

    def __init__(self, complex_: "ChainComplex", degree: int):
        """
        Compute homology representatives in one degree.

        Args:
            complex_: The chain complex
            degree: Homological degree
        """
        self.complex = complex_
        self.degree = degree
        self.boundaries = image_basis(complex_.boundary(degree + 1))
        cycles = kernel_basis(complex_.boundary(degree))
        n = complex_.dim(degree)
        # extend the boundary basis by cycles; the cycles that add rank
        # represent a homology basis
        stacked = SparseMatrix.from_columns(n, complex_.field, self.boundaries + cycles)
        result = column_reduce(stacked)
        nb = len(self.boundaries)
        self.representatives: List[Vector] = [
            cycles[c - nb] for _, c in result.pivots if c >= nb
        ]
        self._basis = SparseMatrix.from_columns(n, complex_.field, self.representatives + self.boundaries)
        self._reduction = column_reduce(self._basis)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def coordinates(self, cycle: Vector) -> List:
        """Coordinates of the class of `cycle` in the representative basis."""
        field = self.complex.field
        if self.complex.boundary(self.degree).apply(cycle):
            raise ChainComplexError(f"vector is not a cycle in degree {self.degree}")
        residual, x = reduce_against(self._reduction, cycle)
        if residual:
            raise ChainComplexError("cycle not in the span of homology and boundaries")
        return [x.get(i, field.zero) for i in range(self.dim)]

    def is_boundary(self, cycle: Vector) -> bool:
        return not any(not self.complex.field.is_zero(c) for c in self.coordinates(cycle))


class ChainComplex:
    """A finitely generated chain complex with named generators."""

    def __init__(self, field: Field,
                 generators: Optional[Dict[int, List[str]]] = None,
                 boundaries: Optional[Dict[int, SparseMatrix]] = None):
        """
        Initialize a chain complex.

        Args:
            field: Coefficient field
            generators: Generator names per degree
            boundaries: Boundary matrices per degree k (degree k -> degree k-1)
        """
        self.field = field
        self.generators: Dict[int, List[str]] = {
            k: list(v) for k, v in (generators or {}).items() if v
        }
        self.boundaries: Dict[int, SparseMatrix] = {}
        for k, m in (boundaries or {}).items():
            field.check_same(m.field)
            if m.shape != (self.dim(k - 1), self.dim(k)):
                raise DimensionError(
                    f"boundary in degree {k} has shape {m.shape}, "
                    f"expected {(self.dim(k - 1), self.dim(k))}"
                )
            if not m.is_zero():
                self.boundaries[k] = m

    # shape

    @property
    def degrees(self) -> List[int]:
        return sorted(self.generators)

    def dim(self, k: int) -> int:
        return len(self.generators.get(k, ()))

    def names(self, k: int) -> List[str]:
        return list(self.generators.get(k, ()))

    @property
    def total_dim(self) -> int:
        return sum(len(v) for v in self.generators.values())

    def boundary(self, k: int) -> SparseMatrix:
        m = self.boundaries.get(k)
        if m is None:
            return SparseMatrix.zero(self.dim(k - 1), self.dim(k), self.field)
        return m

    def check(self) -> List[str]:
        """Violations of d o d = 0."""
        problems = []
        for k in self.degrees:
            if not (self.boundary(k - 1) @ self.boundary(k)).is_zero():
                problems.append(f"boundary squares to a nonzero map from degree {k}")
        return problems

    # homology

    def homology(self, k: int) -> Homology:
        return Homology(self, k)

    def homology_dim(self, k: int) -> int:
        return self.dim(k) - rank(self.boundary(k)) - rank(self.boundary(k + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** (k % 2) * self.dim(k) for k in self.degrees)

    # constructions

    def shift(self, j: int) -> "ChainComplex":
        """C[j]_n = C_{n+j} with boundary multiplied by (-1)^j."""
        sign = self.field.one if j % 2 == 0 else self.field.neg(self.field.one)
        gens = {k - j: names for k, names in self.generators.items()}
        bds = {k - j: m.scale(sign) for k, m in self.boundaries.items()}
        return ChainComplex(self.field, gens, bds)

    @classmethod
    def cone(cls, f: ChainMap, source: "ChainComplex", target: "ChainComplex") -> "ChainComplex":
        """
        Mapping cone of a chain map f: source -> target.

        Cone_k = source_{k-1} + target_k with d(c, d) = (-dc, fc + dd).
        """
        field = source.field
        field.check_same(target.field)
        degrees = set(k + 1 for k in source.degrees) | set(target.degrees)
        gens = {k: [f"s:{n}" for n in source.names(k - 1)] + [f"t:{n}" for n in target.names(k)]
                for k in degrees}
        bds = {}
        for k in degrees:
            s_in, t_in = source.dim(k - 1), target.dim(k)
            s_out, t_out = source.dim(k - 2), target.dim(k - 1)
            fk = f.get(k - 1)
            if fk is None:
                fk = SparseMatrix.zero(target.dim(k - 1), source.dim(k - 1), field)
            bds[k] = SparseMatrix.block(
                [[-source.boundary(k - 1), None], [fk, target.boundary(k)]],
                [s_out, t_out], [s_in, t_in], field,
            )
        return cls(field, gens, bds)

    @classmethod
    def direct_sum(cls, complexes: Sequence["ChainComplex"], field: Field) -> "ChainComplex":
        degrees = sorted(set(k for c in complexes for k in c.degrees))
        gens = {k: [n for c in complexes for n in c.names(k)] for k in degrees}
        bds = {}
        for k in degrees:
            rows = [c.dim(k - 1) for c in complexes]
            cols = [c.dim(k) for c in complexes]
            blocks = [[c.boundary(k) if i == j else None for j, _ in enumerate(complexes)]
                      for i, c in enumerate(complexes)]
            bds[k] = SparseMatrix.block(blocks, rows, cols, field)
        return cls(field, gens, bds)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return (self.field == other.field and self.generators == other.generators
                and self.boundaries == other.boundaries)

    __hash__ = None

    def __repr__(self) -> str:
        dims = ", ".join(f"{k}:{self.dim(k)}" for k in self.degrees)
        return f"{type(self).__name__}({self.field.name}; {dims})"
