"""
Barcode decomposition of a single filtered complex.

The boundary matrices are reduced with columns and rows both ordered by
(level, index). In every degree the generators then split into three
families with distinct leading terms:

- A: reduced-column vectors V_j whose image R_j is nonzero,
- B: the images R_j themselves (one degree lower),
- H: cycles V_i that are neither pivots nor killed,

and their union is an orthogonal basis.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from ..algebra import Vector, column_reduce
from ..errors import ChainComplexError, FiltrationError, OrthogonalityError
from ..config import Config
from .filtered import FilteredComplex, Flavor, is_orthogonal_basis
from .levels import NEG_INF, POS_INF, Level, format_level

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntervalModule:
    """One bar: birth and death levels in a degree."""

    degree: int
    birth: Level
    death: Level
    flavor: Flavor = Flavor.ASCENDING

    @property
    def is_degenerate(self) -> bool:
        return self.birth == self.death

    @property
    def is_essential(self) -> bool:
        return self.death in (POS_INF, NEG_INF)

    def __str__(self) -> str:
        return f"E_{self.degree}({format_level(self.birth)}, {format_level(self.death)})"


@dataclass
class DegreeBases:
    """The A/B/H families of one degree together with their levels."""

    A: List[Vector] = field(default_factory=list)
    B: List[Vector] = field(default_factory=list)
    H: List[Vector] = field(default_factory=list)
    A_levels: List[Level] = field(default_factory=list)
    B_levels: List[Level] = field(default_factory=list)
    H_levels: List[Level] = field(default_factory=list)

    @property
    def all(self) -> List[Vector]:
        return self.A + self.B + self.H


@dataclass
class FilteredDecomposition:
    pairs: List[IntervalModule]
    essentials: List[IntervalModule]
    bases: Dict[int, DegreeBases]


def _decompose_ascending(c: FilteredComplex) -> FilteredDecomposition:
    bases: Dict[int, DegreeBases] = {k: DegreeBases() for k in c.degrees}
    reductions = {}
    for k in c.degrees:
        d = c.boundary(k)
        rows = c.generator_order(k - 1) if c.dim(k - 1) else []
        reductions[k] = column_reduce(d, c.generator_order(k), rows)

    pairs: List[IntervalModule] = []
    essentials: List[IntervalModule] = []
    for k in c.degrees:
        red = reductions[k]
        zero_cols = set(red.zero_columns())
        killed = set()
        above = reductions.get(k + 1)
        if above is not None:
            killed = {r for r, _ in above.pivots}
        for j in c.generator_order(k):
            v = red.change_of_basis.column(j)
            if j in zero_cols:
                if j not in killed:
                    bases[k].H.append(v)
                    bases[k].H_levels.append(c.levels[k][j])
                    essentials.append(IntervalModule(k, c.levels[k][j], POS_INF))
                continue
            image = red.reduced.column(j)
            birth = c.filtration_of(k - 1, image)
            death = c.levels[k][j]
            bases[k].A.append(v)
            bases[k].A_levels.append(death)
            bases[k - 1].B.append(image)
            bases[k - 1].B_levels.append(birth)
            pairs.append(IntervalModule(k - 1, birth, death))
        missing = killed - zero_cols
        if missing:
            raise ChainComplexError(f"pivot rows {sorted(missing)} in degree {k} are not cycles")
    return FilteredDecomposition(pairs, essentials, bases)


def decompose_filtered(c: FilteredComplex) -> FilteredDecomposition:
    """
    Split a filtered complex into interval summands.

    Args:
        c: Ascending or descending filtered complex

    Returns:
        FilteredDecomposition with finite pairs (reported in the degree of
        the boundary), essential classes and the per-degree A/B/H bases.
        Descending complexes report levels in their own convention, so a
        pair has birth >= death and essentials die at -inf.
    """
    broken = c.check()
    if broken:
        raise ChainComplexError("; ".join(broken))
    unordered = c.monotonicity_violations()
    if unordered:
        raise FiltrationError("; ".join(unordered))

    if c.ascending:
        result = _decompose_ascending(c)
    else:
        conj = _decompose_ascending(c.conjugate())
        result = FilteredDecomposition(
            pairs=[IntervalModule(p.degree, -p.birth, -p.death, Flavor.DESCENDING) for p in conj.pairs],
            essentials=[IntervalModule(e.degree, -e.birth, NEG_INF, Flavor.DESCENDING)
                        for e in conj.essentials],
            bases={k: DegreeBases(b.A, b.B, b.H,
                                  [-x for x in b.A_levels],
                                  [-x for x in b.B_levels],
                                  [-x for x in b.H_levels])
                   for k, b in conj.bases.items()},
        )

    if Config.ASSERT_ORTHOGONAL:
        for k, b in result.bases.items():
            if not is_orthogonal_basis(c, k, b.all):
                raise OrthogonalityError(f"reduction basis in degree {k} is not orthogonal")
    logger.debug("%s complex: %d pairs, %d essential classes",
                 c.flavor.value, len(result.pairs), len(result.essentials))
    return result
