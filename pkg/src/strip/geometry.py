"""
The strip M = {|x + y| <= 2 lam}, its order, the glide reflection T and the
fundamental domain D = S + L + A used to name every point.

    S = {-lam < x <= lam, -lam <= y < lam}
    L = {x + y >= -2 lam, x <= -lam, y < lam}
    A = {x + y <= 2 lam, x > -lam, y >= lam}

Every point of M is T^k of exactly one point of D.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Optional, Tuple, Union

from ..config import Config
from ..errors import StripError
from .homeomorphism import Homeomorphism

Coordinate = Union[Fraction, float]


class Region(str, Enum):
    S_INTERIOR = "S_interior"
    L_INTERIOR = "L_interior"
    A_INTERIOR = "A_interior"
    EDGE_BOTTOM = "edge_bottom"
    EDGE_TOP = "edge_top"
    EDGE_LEFT = "edge_left"
    EDGE_RIGHT = "edge_right"
    CORNER = "corner"
    BOUNDARY = "boundary"


CHART_OF_REGION = {
    Region.S_INTERIOR: "S",
    Region.EDGE_BOTTOM: "S",
    Region.EDGE_RIGHT: "S",
    Region.CORNER: "S",
    Region.L_INTERIOR: "L",
    Region.EDGE_LEFT: "L",
    Region.A_INTERIOR: "A",
    Region.EDGE_TOP: "A",
}


@dataclass(frozen=True)
class Cell:
    """Which copy T^k of which piece of the fundamental domain a point lies in."""

    k: int
    region: Region
    chart: str

    def __str__(self) -> str:
        return f"T^{self.k} {self.region.value}"


def _coerce(v) -> Coordinate:
    if isinstance(v, float):
        return v
    return Fraction(v)


def tolerance(*values) -> float:
    """Comparison slack: zero for exact coordinates, METRIC_TOLERANCE once a float is involved."""
    if any(isinstance(v, float) for v in values):
        return Config.METRIC_TOLERANCE
    return 0


@dataclass(frozen=True)
class StripPoint:
    """A point of the strip. `cell_hint` overrides classification when known."""

    x: Coordinate
    y: Coordinate
    lam: Fraction
    cell_hint: Optional[Cell] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "x", _coerce(self.x))
        object.__setattr__(self, "y", _coerce(self.y))
        object.__setattr__(self, "lam", Fraction(self.lam))
        s = self.x + self.y
        if abs(s) > 2 * self.lam + tolerance(s):
            raise StripError(f"({self.x}, {self.y}) lies outside the strip |x+y| <= {2 * self.lam}")

    @cached_property
    def cell(self) -> Cell:
        if self.cell_hint is not None:
            return self.cell_hint
        return _classify(self)

    @property
    def coords(self) -> Tuple[Coordinate, Coordinate]:
        return (self.x, self.y)

    def on_boundary(self) -> bool:
        if self.cell_hint is not None and self.cell_hint.region is Region.BOUNDARY:
            return True
        s = self.x + self.y
        return abs(abs(s) - 2 * self.lam) <= tolerance(s)

    def __str__(self) -> str:
        return f"({_fmt(self.x)}, {_fmt(self.y)})"


def _fmt(v: Coordinate) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _t_power(x: Coordinate, y: Coordinate, lam: Fraction, n: int) -> Tuple[Coordinate, Coordinate]:
    """T^n(x, y); T^2 translates by (-4 lam, 4 lam)."""
    if isinstance(x, float) or isinstance(y, float):
        x, y, lam = float(x), float(y), float(lam)
    four, two = 4 * lam, 2 * lam
    j, r = divmod(n, 2)
    x, y = x - four * j, y + four * j
    if r:
        x, y = -two - y, two - x
    return x, y


def T(p: StripPoint, n: int = 1) -> StripPoint:
    """
    The n-th iterate of T(x, y) = (-2 lam - y, 2 lam - x).

    Args:
        p: Point of the strip
        n: Any integer; negative values iterate T^-1(x, y) = (2 lam - y, -2 lam - x)

    Returns:
        The image point, carrying over a known cell shifted by n
    """
    x, y = _t_power(p.x, p.y, p.lam, n)
    hint = None
    if p.cell_hint is not None:
        hint = Cell(p.cell_hint.k + n, p.cell_hint.region, p.cell_hint.chart)
    return StripPoint(x, y, p.lam, hint)


def T_inverse(p: StripPoint) -> StripPoint:
    return T(p, -1)


def _region_in_domain(x: Coordinate, y: Coordinate, lam, tol=0) -> Optional[Tuple[Region, str]]:
    def eq(a, b):
        return abs(a - b) <= tol

    def le(a, b):
        return a <= b or eq(a, b)

    def lt(a, b):
        return a < b and not eq(a, b)

    s = x + y
    if lt(-lam, x) and le(x, lam) and le(-lam, y) and lt(y, lam):
        if eq(x, lam) and eq(y, -lam):
            return Region.CORNER, "S"
        if eq(x, lam):
            return Region.EDGE_RIGHT, "S"
        if eq(y, -lam):
            return Region.EDGE_BOTTOM, "S"
        return Region.S_INTERIOR, "S"
    if le(-2 * lam, s) and le(x, -lam) and lt(y, lam):
        if eq(s, -2 * lam):
            return Region.BOUNDARY, "L"
        if eq(x, -lam):
            return Region.EDGE_LEFT, "L"
        return Region.L_INTERIOR, "L"
    if le(s, 2 * lam) and lt(-lam, x) and le(lam, y):
        if eq(s, 2 * lam):
            return Region.BOUNDARY, "A"
        if eq(y, lam):
            return Region.EDGE_TOP, "A"
        return Region.A_INTERIOR, "A"
    return None


def _classify(p: StripPoint) -> Cell:
    lam = p.lam
    diff = p.y - p.x
    k0 = math.floor((diff + 2 * lam) / (4 * lam))
    tol = tolerance(p.x, p.y)
    for k in (k0, k0 - 1, k0 + 1):
        x, y = _t_power(p.x, p.y, lam, -k)
        found = _region_in_domain(x, y, lam, tol)
        if found is not None:
            region, chart = found
            return Cell(k, region, chart)
    raise StripError(f"could not place {p} in the fundamental domain")


def classify(p: StripPoint) -> Tuple[int, Region]:
    """
    Name a point: the unique k with T^-k(p) in D, and its region there.

    Args:
        p: Point of the strip

    Returns:
        (k, region)
    """
    cell = p.cell
    return cell.k, cell.region


def base_point(p: StripPoint) -> Tuple[Coordinate, Coordinate]:
    """Coordinates of T^-k(p) inside the fundamental domain."""
    return _t_power(p.x, p.y, p.lam, -p.cell.k)


def chart(p: StripPoint) -> Tuple[Coordinate, Coordinate]:
    """
    Level-space chart coordinates of a point (before applying xi):
    S: (x, y), L: (-2 lam - x, y), A: (x, 2 lam - y), taken at T^-k(p).
    """
    x, y = base_point(p)
    two = 2 * float(p.lam) if isinstance(x, float) else 2 * p.lam
    name = p.cell.chart
    if name == "S":
        return x, y
    if name == "L":
        return -two - x, y
    return x, two - y


def from_chart(cell: Cell, c1: Coordinate, c2: Coordinate, lam: Fraction) -> StripPoint:
    """
    Inverse of `chart` for a known copy and chart.

    The region of the returned cell is read off the chart coordinates, so
    only `cell.k` and `cell.chart` have to be right.
    """
    if isinstance(c1, float) or isinstance(c2, float):
        c1, c2 = float(c1), float(c2)
    two = 2 * float(lam) if isinstance(c1, float) else 2 * lam
    if cell.chart == "S":
        x, y = c1, c2
    elif cell.chart == "L":
        x, y = -two - c1, c2
    else:
        x, y = c1, two - c2
    found = _region_in_domain(x, y, lam, tolerance(x, y))
    if found is not None and found[1] == cell.chart:
        cell = Cell(cell.k, found[0], cell.chart)
    x, y = _t_power(x, y, lam, cell.k)
    return StripPoint(x, y, lam, cell)


def flow_point(p: StripPoint, eps, phi: Homeomorphism) -> StripPoint:
    """
    Flow a point by eps.

    In the chart of its cell the flow reads S: (rho_-eps(x), rho_eps(y)),
    L: (-2 lam - rho_eps(-2 lam - x), rho_eps(y)),
    A: (rho_-eps(x), 2 lam - rho_-eps(2 lam - y)), conjugated back by T^k.
    Regions are preserved.
    """
    phi.check_lambda(p.lam)
    if eps == 0:
        return p
    c1, c2 = chart(p)
    name = p.cell.chart
    if name == "S":
        f1, f2 = phi.rho_value(-eps, c1), phi.rho_value(eps, c2)
    elif name == "L":
        f1, f2 = phi.rho_value(eps, c1), phi.rho_value(eps, c2)
    else:
        f1, f2 = phi.rho_value(-eps, c1), phi.rho_value(-eps, c2)
    if isinstance(f1, float) != isinstance(f2, float):
        f1, f2 = float(f1), float(f2)
    return from_chart(p.cell, f1, f2, p.lam)


def leq(v: StripPoint, w: StripPoint, tol=0) -> bool:
    """(x, y) <= (x', y') iff x >= x' and y <= y', up to tol."""
    return v.x >= w.x - tol and v.y <= w.y + tol


def strictly_less(v: StripPoint, w: StripPoint, tol=0) -> bool:
    """Strict in both coordinates: x > x' and y < y', by more than tol."""
    return v.x > w.x + tol and v.y < w.y - tol


def sampled_leq(v: StripPoint, w: StripPoint) -> bool:
    """`leq` with the float slack of `tolerance`, for points built on the same level grid."""
    return leq(v, w, tolerance(v.x, v.y, w.x, w.y))


def sampled_strictly_less(v: StripPoint, w: StripPoint) -> bool:
    return strictly_less(v, w, tolerance(v.x, v.y, w.x, w.y))
