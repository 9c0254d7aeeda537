"""
Ascending and descending filtered chain complexes.

Each generator carries a level. Ascending complexes take the maximum level
over the support of a chain and the boundary may only lower it; descending
complexes take the minimum and the boundary may only raise it.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..algebra import Field, SparseMatrix, Vector, column_reduce, rank, reduce_against
from ..errors import DimensionError, FiltrationError
from .chain import ChainComplex
from .levels import NEG_INF, POS_INF, Level, format_level


class Flavor(str, Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"

    @property
    def opposite(self) -> "Flavor":
        return Flavor.DESCENDING if self is Flavor.ASCENDING else Flavor.ASCENDING


class FilteredComplex(ChainComplex):
    """A chain complex whose generators carry filtration levels."""

    def __init__(self, field: Field, flavor: Flavor, lam: Fraction,
                 generators: Optional[Dict[int, List[str]]] = None,
                 levels: Optional[Dict[int, List[Level]]] = None,
                 boundaries: Optional[Dict[int, SparseMatrix]] = None):
        """
        Initialize a filtered complex.

        Args:
            field: Coefficient field
            flavor: ASCENDING or DESCENDING
            lam: The bound shared with the enclosing cospan
            generators: Generator names per degree
            levels: One level per generator, per degree
            boundaries: Boundary matrices per degree
        """
        super().__init__(field, generators, boundaries)
        self.flavor = Flavor(flavor)
        self.lam = Fraction(lam)
        levels = levels or {}
        self.levels: Dict[int, List[Level]] = {}
        for k in self.degrees:
            lv = list(levels.get(k, ()))
            if len(lv) != self.dim(k):
                raise DimensionError(f"degree {k} has {self.dim(k)} generators but {len(lv)} levels")
            self.levels[k] = lv
        extra = [k for k, lv in levels.items() if lv and k not in self.generators]
        if extra:
            raise DimensionError(f"levels given for empty degrees {extra}")

    @property
    def ascending(self) -> bool:
        return self.flavor is Flavor.ASCENDING

    def level(self, k: int, i: int) -> Level:
        return self.levels[k][i]

    def sort_key(self, k: int, i: int):
        """Key placing generators from lowest to highest in filtration order."""
        lv = self.levels[k][i]
        return (lv if self.ascending else -lv, i)

    def generator_order(self, k: int) -> List[int]:
        return sorted(range(self.dim(k)), key=lambda i: self.sort_key(k, i))

    def empty_level(self) -> Level:
        return NEG_INF if self.ascending else POS_INF

    def filtration_of(self, k: int, v: Vector) -> Level:
        """Level of a chain: max (ascending) or min (descending) over its support."""
        if any(not 0 <= i < self.dim(k) for i in v):
            raise DimensionError(f"vector does not live in degree {k}")
        if not v:
            return self.empty_level()
        values = [self.levels[k][i] for i in v]
        return max(values) if self.ascending else min(values)

    def within(self, level: Level, threshold) -> bool:
        """Whether a generator at `level` belongs to the truncation at threshold."""
        return level <= threshold if self.ascending else level >= threshold

    def truncate(self, threshold) -> Dict[int, List[int]]:
        """Generator indices of C^{<=t} (ascending) or C_{>=t} (descending)."""
        return {k: [i for i, lv in enumerate(self.levels[k]) if self.within(lv, threshold)]
                for k in self.degrees}

    def conjugate(self) -> "FilteredComplex":
        """Same complex, levels negated, flavor swapped."""
        return FilteredComplex(
            self.field, self.flavor.opposite, self.lam, self.generators,
            {k: [-lv for lv in lvs] for k, lvs in self.levels.items()}, self.boundaries,
        )

    def with_levels(self, levels: Dict[int, List[Level]]) -> "FilteredComplex":
        return FilteredComplex(self.field, self.flavor, self.lam, self.generators, levels, self.boundaries)

    def permuted(self, perms: Dict[int, Sequence[int]]) -> "FilteredComplex":
        """Reorder generators: new generator i of degree k is old perms[k][i]."""
        gens, levels, bds = {}, {}, {}
        for k in self.degrees:
            p = list(perms.get(k, range(self.dim(k))))
            gens[k] = [self.generators[k][i] for i in p]
            levels[k] = [self.levels[k][i] for i in p]
        for k in self.degrees:
            rows = list(perms.get(k - 1, range(self.dim(k - 1))))
            cols = list(perms.get(k, range(self.dim(k))))
            bds[k] = self.boundary(k).submatrix(rows, cols)
        return FilteredComplex(self.field, self.flavor, self.lam, gens, levels, bds)

    def bound_violations(self) -> List[str]:
        problems = []
        for k in self.degrees:
            for i, lv in enumerate(self.levels[k]):
                if not -self.lam < lv < self.lam:
                    problems.append(
                        f"{self.flavor.value} generator {self.generators[k][i]} (degree {k}) "
                        f"has level {format_level(lv)} outside (-{self.lam}, {self.lam})"
                    )
        return problems

    def monotonicity_violations(self) -> List[str]:
        problems = []
        for k in self.degrees:
            d = self.boundary(k)
            for j in range(d.cols):
                col = d.column(j)
                if not col:
                    continue
                image = self.filtration_of(k - 1, col)
                own = self.levels[k][j]
                bad = image > own if self.ascending else image < own
                if bad:
                    problems.append(
                        f"{self.flavor.value} boundary of {self.generators[k][j]} (degree {k}) "
                        f"has level {format_level(image)} beyond {format_level(own)}"
                    )
        return problems

    def validate(self) -> List[str]:
        """Violations of d o d = 0, the bound, and boundary monotonicity."""
        return self.check() + self.bound_violations() + self.monotonicity_violations()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FilteredComplex):
            return NotImplemented
        return (super().__eq__(other) and self.flavor is other.flavor
                and self.lam == other.lam and self.levels == other.levels)

    __hash__ = None


def filtration_of(c: FilteredComplex, k: int, v: Vector) -> Level:
    """
    Filtration level of a chain vector.

    Args:
        c: Filtered complex
        k: Degree the vector lives in
        v: Sparse chain vector

    Returns:
        Max generator level over nonzero coordinates (ascending) or min
        (descending); -inf / +inf for the zero vector
    """
    if k not in c.generators and v:
        raise DimensionError(f"degree {k} is out of range")
    return c.filtration_of(k, v)


def is_orthogonal_basis(c: FilteredComplex, k: int, vectors: Sequence[Vector]) -> bool:
    """
    Test whether vectors form an orthogonal set in degree k.

    For every threshold t the number of vectors at level <= t (>= t when
    descending) must equal the dimension of span(vectors) inside C^{<=t}.
    Linearly dependent input is never orthogonal.

    Args:
        c: Filtered complex
        k: Degree
        vectors: Chain vectors of degree k

    Returns:
        True when the set is orthogonal
    """
    vectors = list(vectors)
    if not vectors:
        return True
    n = c.dim(k)
    if any(not 0 <= i < n for v in vectors for i in v):
        raise DimensionError(f"vector does not live in degree {k}")
    stacked = SparseMatrix.from_columns(n, c.field, vectors)
    if rank(stacked) != len(vectors):
        return False
    own = [c.filtration_of(k, v) for v in vectors]
    thresholds = set(own) | set(c.levels.get(k, ()))
    for t in thresholds:
        count = sum(1 for lv in own if c.within(lv, t))
        outside = [i for i in range(n) if not c.within(c.levels[k][i], t)]
        inside_dim = len(vectors) - rank(stacked.submatrix(outside, range(len(vectors))))
        if count != inside_dim:
            return False
    return True


def spectral_invariant(c: FilteredComplex, k: int, cycle: Vector) -> Level:
    """
    Best level of a cycle's class: min over homologous cycles of their level
    (ascending), max when descending. A boundary has level -inf (+inf).
    """
    if c.boundary(k).apply(cycle):
        raise FiltrationError(f"vector is not a cycle in degree {k}")
    d = c.boundary(k + 1)
    order = c.generator_order(k)
    result = column_reduce(d, c.generator_order(k + 1), order)
    residual, _ = reduce_against(result, cycle)
    return c.filtration_of(k, residual)
