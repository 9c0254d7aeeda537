"""
The filtered cospan C_up -> D <- C_down.

C_up is an ascending filtered complex, C_down a descending one, D an
unfiltered complex, and psi_up / psi_down are chain maps into D. Every
level sits strictly inside (-lam, lam).
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..algebra import Field, SparseMatrix, field_from_name
from ..complex import ChainComplex, ChainMap, FilteredComplex, Flavor
from ..config import Config
from ..errors import DimensionError, LambdaMismatchError
from ..strip.homeomorphism import Homeomorphism

logger = logging.getLogger(__name__)


def _map_at(maps: ChainMap, k: int, rows: int, cols: int, field: Field) -> SparseMatrix:
    m = maps.get(k)
    if m is None:
        return SparseMatrix.zero(rows, cols, field)
    return m


class FilteredCospan:
    """The quintuple (C_up, C_down, D, psi_up, psi_down) with its bound."""

    def __init__(self, up: FilteredComplex, down: FilteredComplex, mid: ChainComplex,
                 psi_up: Optional[ChainMap] = None, psi_down: Optional[ChainMap] = None):
        """
        Initialize a cospan.

        Args:
            up: Ascending filtered complex
            down: Descending filtered complex
            mid: Unfiltered complex D
            psi_up: Per-degree matrices C_up[k] -> D[k]
            psi_down: Per-degree matrices C_down[k] -> D[k]
        """
        if up.lam != down.lam:
            raise LambdaMismatchError(f"up complex has bound {up.lam}, down complex {down.lam}")
        up.field.check_same(down.field)
        up.field.check_same(mid.field)
        self.up = up
        self.down = down
        self.mid = mid
        self.psi_up: ChainMap = {}
        self.psi_down: ChainMap = {}
        for name, maps, src in (("psi_up", psi_up or {}, up), ("psi_down", psi_down or {}, down)):
            store = getattr(self, name)
            for k, m in maps.items():
                if m.shape != (mid.dim(k), src.dim(k)):
                    raise DimensionError(
                        f"{name} in degree {k} has shape {m.shape}, expected {(mid.dim(k), src.dim(k))}"
                    )
                if not m.is_zero():
                    store[k] = m

    @property
    def field(self) -> Field:
        return self.up.field

    @property
    def lam(self) -> Fraction:
        return self.up.lam

    @property
    def degrees(self) -> List[int]:
        return sorted(set(self.up.degrees) | set(self.down.degrees) | set(self.mid.degrees))

    def psi_up_at(self, k: int) -> SparseMatrix:
        return _map_at(self.psi_up, k, self.mid.dim(k), self.up.dim(k), self.field)

    def psi_down_at(self, k: int) -> SparseMatrix:
        return _map_at(self.psi_down, k, self.mid.dim(k), self.down.dim(k), self.field)

    def generator_counts(self) -> Dict[str, Dict[int, int]]:
        return {
            "up": {k: self.up.dim(k) for k in self.up.degrees},
            "down": {k: self.down.dim(k) for k in self.down.degrees},
            "mid": {k: self.mid.dim(k) for k in self.mid.degrees},
        }

    def validate(self) -> List[str]:
        return validate(self)

    def permuted(self, up: Optional[Dict[int, Sequence[int]]] = None,
                 down: Optional[Dict[int, Sequence[int]]] = None,
                 mid: Optional[Dict[int, Sequence[int]]] = None) -> "FilteredCospan":
        """Reorder generators; new generator i of degree k is old perm[k][i]."""
        up, down, mid = up or {}, down or {}, mid or {}

        def perm(p, c, k):
            return list(p.get(k, range(c.dim(k))))

        mid_gens, mid_bds = {}, {}
        for k in self.mid.degrees:
            mid_gens[k] = [self.mid.generators[k][i] for i in perm(mid, self.mid, k)]
            mid_bds[k] = self.mid.boundary(k).submatrix(perm(mid, self.mid, k - 1), perm(mid, self.mid, k))
        psi_up = {k: m.submatrix(perm(mid, self.mid, k), perm(up, self.up, k)) for k, m in self.psi_up.items()}
        psi_down = {k: m.submatrix(perm(mid, self.mid, k), perm(down, self.down, k))
                    for k, m in self.psi_down.items()}
        return FilteredCospan(
            self.up.permuted(up), self.down.permuted(down),
            ChainComplex(self.field, mid_gens, mid_bds), psi_up, psi_down,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FilteredCospan):
            return NotImplemented
        return (self.up == other.up and self.down == other.down and self.mid == other.mid
                and self.psi_up == other.psi_up and self.psi_down == other.psi_down)

    __hash__ = None

    def __repr__(self) -> str:
        return (f"FilteredCospan(lam={self.lam}, field={self.field.name}, "
                f"up={self.up.total_dim}, down={self.down.total_dim}, mid={self.mid.total_dim})")


def zero_cospan(field: Optional[Field] = None, lam=None) -> FilteredCospan:
    field = field or field_from_name(Config.DEFAULT_FIELD)
    lam = Fraction(Config.DEFAULT_LAMBDA if lam is None else lam)
    return FilteredCospan(
        FilteredComplex(field, Flavor.ASCENDING, lam),
        FilteredComplex(field, Flavor.DESCENDING, lam),
        ChainComplex(field),
    )


def validate(c: FilteredCospan) -> List[str]:
    """
    Collect every violated cospan invariant.

    Args:
        c: The cospan to check

    Returns:
        Human-readable violations; empty when the cospan is valid
    """
    problems: List[str] = []
    if c.up.flavor is not Flavor.ASCENDING:
        problems.append("up complex is not ascending")
    if c.down.flavor is not Flavor.DESCENDING:
        problems.append("down complex is not descending")
    problems += [f"up: {p}" for p in c.up.validate()]
    problems += [f"down: {p}" for p in c.down.validate()]
    problems += [f"mid: {p}" for p in c.mid.check()]
    for name, src, at in (("psi_up", c.up, c.psi_up_at), ("psi_down", c.down, c.psi_down_at)):
        for k in src.degrees:
            lhs = c.mid.boundary(k) @ at(k)
            rhs = at(k - 1) @ src.boundary(k)
            if lhs != rhs:
                problems.append(f"{name} is not a chain map in degree {k}")
    if problems:
        logger.debug("cospan failed validation with %d problems", len(problems))
    return problems


def _sum_filtered(parts: Sequence[FilteredComplex], flavor: Flavor, field: Field, lam) -> FilteredComplex:
    plain = ChainComplex.direct_sum(parts, field)
    levels = {k: [lv for p in parts for lv in p.levels.get(k, ())] for k in plain.degrees}
    return FilteredComplex(field, flavor, lam, plain.generators, levels, plain.boundaries)


def _sum_maps(cs: Sequence[FilteredCospan], attr: str, src_attr: str, field: Field) -> ChainMap:
    degrees = sorted(set(k for c in cs for k in getattr(c, src_attr).degrees))
    out = {}
    for k in degrees:
        rows = [c.mid.dim(k) for c in cs]
        cols = [getattr(c, src_attr).dim(k) for c in cs]
        blocks = [[getattr(c, attr)(k) if i == j else None for j in range(len(cs))]
                  for i, c in enumerate(cs)]
        out[k] = SparseMatrix.block(blocks, rows, cols, field)
    return out


def direct_sum(cs: Sequence[FilteredCospan], field: Optional[Field] = None, lam=None) -> FilteredCospan:
    """
    Block-diagonal sum of cospans, generators concatenated in list order.

    Args:
        cs: Cospans sharing field and bound
        field: Field of the empty sum (defaults to Config.DEFAULT_FIELD)
        lam: Bound of the empty sum (defaults to Config.DEFAULT_LAMBDA)

    Returns:
        The direct sum
    """
    cs = list(cs)
    if not cs:
        return zero_cospan(field, lam)
    field, lam = cs[0].field, cs[0].lam
    for c in cs[1:]:
        field.check_same(c.field)
        if c.lam != lam:
            raise LambdaMismatchError(f"cannot sum cospans with bounds {lam} and {c.lam}")
    if len(cs) == 1:
        return cs[0]
    return FilteredCospan(
        _sum_filtered([c.up for c in cs], Flavor.ASCENDING, field, lam),
        _sum_filtered([c.down for c in cs], Flavor.DESCENDING, field, lam),
        ChainComplex.direct_sum([c.mid for c in cs], field),
        _sum_maps(cs, "psi_up_at", "up", field),
        _sum_maps(cs, "psi_down_at", "down", field),
    )


def flow_shift(c: FilteredCospan, eps, phi: Homeomorphism) -> FilteredCospan:
    """
    Apply the flow: up levels move to rho_-eps, down levels to rho_eps.

    Args:
        c: The cospan
        eps: Nonnegative flow parameter
        phi: Homeomorphism built for c.lam

    Returns:
        A cospan with the same complexes and maps and moved levels
    """
    phi.check_lambda(c.lam)
    if eps < 0:
        raise ValueError("flow parameter must be nonnegative")
    if eps == 0:
        return c
    up = c.up.with_levels({k: [phi.rho(-eps, lv) for lv in lvs] for k, lvs in c.up.levels.items()})
    down = c.down.with_levels({k: [phi.rho(eps, lv) for lv in lvs] for k, lvs in c.down.levels.items()})
    return FilteredCospan(up, down, c.mid, c.psi_up, c.psi_down)


def conjugate_cospan(c: FilteredCospan) -> FilteredCospan:
    """Swap the two legs, negating their levels."""
    return FilteredCospan(c.down.conjugate(), c.up.conjugate(), c.mid, c.psi_down, c.psi_up)
