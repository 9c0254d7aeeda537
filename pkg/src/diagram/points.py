"""
Persistence diagrams on the strip.

Every summand of a decomposition is a block whose lower corner is a point
of the strip away from its boundary. The table below places the point
inside the fundamental domain and then moves it into the right copy with T.

    Up(a, b)_k         T^(-k-1)(-2 lam - a, b)     L interior
    UpInf(a)_k         T^(-k)(lam, a)              right edge
    NE(a)_k            T^(-k)(-lam, a)             left edge
    Down(a, b)_k       T^(-k-1)(b, 2 lam - a)      A interior
    DownNegInf(a)_k    T^(-k)(a, -lam)             bottom edge
    SE(a)_k            T^(-k)(a, lam)              top edge
    GT(a, b)_k         T^(-k)(a, b)                S interior
    Box_k              T^(-k+1)(lam, -lam)         corner
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..complex import level_value
from ..cospan import Summand, SummandKind
from ..errors import LambdaMismatchError, StripError
from ..strip import Cell, Region, StripPoint, T, base_point

logger = logging.getLogger(__name__)


def _cell_base(s: Summand, lam: Fraction) -> Tuple[int, Region, str, object, object]:
    """(power of T, region, chart, x, y) of the block point of a summand."""
    k, kind = s.degree, s.kind
    a = level_value(s.a) if s.a is not None else None
    b = level_value(s.b) if s.b is not None else None
    if kind is SummandKind.UP:
        return -k - 1, Region.L_INTERIOR, "L", -2 * lam - a, b
    if kind is SummandKind.UP_INF:
        return -k, Region.EDGE_RIGHT, "S", lam, a
    if kind is SummandKind.NE:
        return -k, Region.EDGE_LEFT, "L", -lam, a
    if kind is SummandKind.DOWN:
        return -k - 1, Region.A_INTERIOR, "A", b, 2 * lam - a
    if kind is SummandKind.DOWN_NEG_INF:
        return -k, Region.EDGE_BOTTOM, "S", a, -lam
    if kind is SummandKind.SE:
        return -k, Region.EDGE_TOP, "A", a, lam
    if kind is SummandKind.GT:
        return -k, Region.S_INTERIOR, "S", a, b
    return -k + 1, Region.CORNER, "S", lam, -lam


def point_of_summand(s: Summand, lam) -> StripPoint:
    """
    Diagram point of one summand.

    Args:
        s: The summand
        lam: The bound

    Returns:
        The point, carrying its known cell
    """
    lam = Fraction(lam)
    n, region, chart_name, x, y = _cell_base(s, lam)
    if isinstance(x, float) or isinstance(y, float):
        x, y = float(x), float(y)
    p = StripPoint(x, y, lam, Cell(0, region, chart_name))
    return T(p, n)


def summand_of_point(p: StripPoint) -> Summand:
    """
    Inverse of `point_of_summand`.

    Raises:
        StripError: If p lies on the boundary of the strip
    """
    lam = p.lam
    n, region = p.cell.k, p.cell.region
    x, y = base_point(p)
    if region is Region.BOUNDARY:
        raise StripError(f"boundary point {p} is not the point of a summand")
    if region is Region.S_INTERIOR:
        return Summand.gt(-n, up=y, down=x)
    if region is Region.EDGE_RIGHT:
        return Summand(SummandKind.UP_INF, -n, y)
    if region is Region.EDGE_LEFT:
        return Summand(SummandKind.NE, -n, y)
    if region is Region.EDGE_TOP:
        return Summand(SummandKind.SE, -n, x)
    if region is Region.EDGE_BOTTOM:
        return Summand(SummandKind.DOWN_NEG_INF, -n, x)
    if region is Region.CORNER:
        return Summand(SummandKind.BOX, 1 - n)
    if region is Region.L_INTERIOR:
        return Summand(SummandKind.UP, -n - 1, -2 * lam - x, y)
    return Summand(SummandKind.DOWN, -n - 1, 2 * lam - y, x)


@dataclass(frozen=True)
class DiagramPoint:
    point: StripPoint
    summand: Summand

    def record(self) -> str:
        cell = self.point.cell
        return (f"point k={cell.k} region={cell.region.value} x={format_coordinate(self.point.x)} "
                f"y={format_coordinate(self.point.y)} from={self.summand}")


def format_coordinate(v) -> str:
    if isinstance(v, float):
        return repr(v)
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


class Diagram:
    """A finite multiset of strip points off the boundary, each tagged with its summand."""

    def __init__(self, points: Sequence[DiagramPoint], lam):
        self.lam = Fraction(lam)
        for dp in points:
            if dp.point.lam != self.lam:
                raise LambdaMismatchError(f"point {dp.point} has bound {dp.point.lam}, diagram has {self.lam}")
            if dp.point.cell.region is Region.BOUNDARY:
                raise StripError(f"diagram point {dp.point} lies on the boundary")
        self.points: List[DiagramPoint] = list(points)

    @classmethod
    def from_points(cls, points: Sequence[StripPoint], lam) -> "Diagram":
        return cls([DiagramPoint(p, summand_of_point(p)) for p in points], lam)

    @property
    def strip_points(self) -> List[StripPoint]:
        return [dp.point for dp in self.points]

    def by_cell(self) -> Dict[Cell, List[int]]:
        groups: Dict[Cell, List[int]] = {}
        for i, dp in enumerate(self.points):
            groups.setdefault(dp.point.cell, []).append(i)
        return groups

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[DiagramPoint]:
        return iter(self.points)

    def __str__(self) -> str:
        return "\n".join(dp.record() for dp in self.points)

    def __repr__(self) -> str:
        return f"Diagram({len(self.points)} points, lam={self.lam})"


def diagram_of_summands(summands: Sequence[Summand], lam) -> Diagram:
    return Diagram([DiagramPoint(point_of_summand(s, lam), s) for s in summands], lam)


def diagram_of(d, lam: Optional[Fraction] = None) -> Diagram:
    """
    Persistence diagram of a decomposition.

    Args:
        d: Decomposition from `decompose`
        lam: The bound (defaults to the cospan's)

    Returns:
        Diagram with one point per summand, in summand order
    """
    lam = d.cospan.lam if lam is None else Fraction(lam)
    if lam != d.cospan.lam:
        raise LambdaMismatchError(f"diagram bound {lam} differs from the cospan's {d.cospan.lam}")
    diagram = diagram_of_summands(d.summands, lam)
    logger.debug("diagram with %d points", len(diagram))
    return diagram
