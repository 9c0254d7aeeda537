"""Seeded random inputs with known answers."""

import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np

from ..algebra import Field, QQ, SparseMatrix, inverse
from ..complex import ChainComplex, FilteredComplex
from ..cospan import FilteredCospan, Summand, SummandKind, direct_sum, standard_summand
from ..diagram import Diagram, diagram_of_summands
from ..simplicial import SimplicialInput

logger = logging.getLogger(__name__)


def random_level(rng: np.random.Generator, lam, denominator: int = 4) -> Fraction:
    """A rational strictly inside (-lam, lam) on a grid of step lam / denominator."""
    lam = Fraction(lam)
    j = int(rng.integers(-denominator + 1, denominator))
    return lam * Fraction(j, denominator)


def random_summand(rng: np.random.Generator, lam, kind: Optional[SummandKind] = None,
                   degrees: Sequence[int] = (0, 1, 2)) -> Summand:
    kind = kind or list(SummandKind)[int(rng.integers(len(SummandKind)))]
    k = int(degrees[int(rng.integers(len(degrees)))])
    if kind is SummandKind.BOX:
        return Summand(kind, k)
    if kind in (SummandKind.UP_INF, SummandKind.DOWN_NEG_INF, SummandKind.NE, SummandKind.SE):
        return Summand(kind, k, random_level(rng, lam))
    if kind is SummandKind.GT:
        return Summand.gt(k, up=random_level(rng, lam), down=random_level(rng, lam))
    a = random_level(rng, lam)
    b = random_level(rng, lam)
    while b == a:
        b = random_level(rng, lam)
    lo, hi = min(a, b), max(a, b)
    return Summand(kind, k, lo, hi) if kind is SummandKind.UP else Summand(kind, k, hi, lo)


def random_summands(rng: np.random.Generator, n: int, lam,
                    degrees: Sequence[int] = (0, 1, 2)) -> List[Summand]:
    return [random_summand(rng, lam, degrees=degrees) for _ in range(n)]


def _random_scalar(rng: np.random.Generator, field: Field):
    return field.coerce(int(rng.integers(-2, 3)))


def _unitriangular(rng: np.random.Generator, order: List[int], field: Field, density: float) -> SparseMatrix:
    """Columns i = e_i plus random multiples of e_j for j earlier than i in `order`."""
    n = len(order)
    cols = [{i: field.one} for i in range(n)]
    for pos, i in enumerate(order):
        for j in order[:pos]:
            if rng.random() < density:
                v = _random_scalar(rng, field)
                if not field.is_zero(v):
                    cols[i][j] = v
    return SparseMatrix.from_columns(n, field, cols)


def scramble(c: FilteredCospan, rng: np.random.Generator, density: float = 0.5) -> FilteredCospan:
    """
    Change bases without changing the isomorphism type.

    Leg generators pick up random multiples of generators that come before
    them in filtration order, so levels are unchanged; D gets an arbitrary
    unitriangular change of basis.
    """
    field = c.field

    def rebase(cx: ChainComplex, change):
        return {k: inverse(change[k - 1]) @ cx.boundary(k) @ change[k] for k in cx.degrees if k - 1 in change}

    legs = {}
    for name in ("up", "down"):
        cx: FilteredComplex = getattr(c, name)
        change = {k: _unitriangular(rng, cx.generator_order(k), field, density) for k in cx.degrees}
        legs[name] = (FilteredComplex(field, cx.flavor, cx.lam, cx.generators, cx.levels, rebase(cx, change)),
                      change)
    mid_change = {k: _unitriangular(rng, list(range(c.mid.dim(k))), field, density) for k in c.mid.degrees}
    mid = ChainComplex(field, c.mid.generators, rebase(c.mid, mid_change))

    def psi(at, change, degrees):
        out = {}
        for k in degrees:
            if k in mid_change:
                out[k] = inverse(mid_change[k]) @ at(k) @ change[k]
        return out

    up, up_change = legs["up"]
    down, down_change = legs["down"]
    return FilteredCospan(up, down, mid, psi(c.psi_up_at, up_change, up.degrees),
                          psi(c.psi_down_at, down_change, down.degrees))


def random_cospan(rng: np.random.Generator, field: Field = QQ, lam=2, max_generators: int = 12,
                  summands: Optional[List[Summand]] = None):
    """
    A scrambled direct sum of standard summands.

    Args:
        rng: Seeded generator
        field: Coefficient field
        lam: The bound
        max_generators: Cap on the total generator count of the three complexes
        summands: Use these instead of drawing

    Returns:
        (cospan, summands it decomposes into)
    """
    if summands is None:
        summands, total = [], 0
        while True:
            s = random_summand(rng, lam)
            size = standard_summand(s, field, lam)
            count = size.up.total_dim + size.down.total_dim + size.mid.total_dim
            if total + count > max_generators:
                break
            summands.append(s)
            total += count
    parts = [standard_summand(s, field, lam) for s in summands]
    c = scramble(direct_sum(parts, field, lam), rng)
    logger.debug("random cospan %r from %d summands", c, len(summands))
    return c, sorted(summands)


def random_simplicial(rng: np.random.Generator, n_vertices: int = 5, lam=2, field_name: str = "Q",
                      p_edge: float = 0.6, p_triangle: float = 0.5, p_pinned: float = 0.15) -> SimplicialInput:
    """A random flag-like complex on a few vertices; some vertices are pinned to +-lam."""
    lam = Fraction(lam)
    values = {}
    for v in range(n_vertices):
        if rng.random() < p_pinned:
            values[v] = lam if rng.random() < 0.5 else -lam
        else:
            values[v] = random_level(rng, lam)
    edges = [e for e in combinations(range(n_vertices), 2) if rng.random() < p_edge]
    known = set(edges)
    triangles = [t for t in combinations(range(n_vertices), 3)
                 if all(f in known for f in combinations(t, 2)) and rng.random() < p_triangle]
    return SimplicialInput(lam, field_name, values, edges + triangles)


def random_diagram(rng: np.random.Generator, n: int, lam=2) -> Diagram:
    return diagram_of_summands(random_summands(rng, n, lam), lam)
