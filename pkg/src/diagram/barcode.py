"""Level-set barcodes: one interval per summand, endpoints tagged open or closed."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from ..complex import Level, format_level, level_value
from ..cospan import Summand, SummandKind
from ..strip import StripPoint
from .points import summand_of_point


@dataclass(frozen=True)
class Interval:
    degree: int
    left: Level
    right: Level
    left_closed: bool
    right_closed: bool

    def sort_key(self):
        return (self.degree, float(level_value(self.left)), float(level_value(self.right)),
                not self.left_closed, self.right_closed)

    def __str__(self) -> str:
        lb = "[" if self.left_closed else "("
        rb = "]" if self.right_closed else ")"
        return f"bar k={self.degree} {lb}{format_level(self.left)},{format_level(self.right)}{rb}"


def interval_of_summand(s: Summand, lam) -> Interval:
    """
    Barcode interval of a summand.

    Args:
        s: The summand
        lam: The bound; infinite ends are drawn at +-lam

    Returns:
        The interval, in degree k or k-1 depending on the kind
    """
    lam = Fraction(lam)
    k, a, b = s.degree, s.a, s.b
    kind = s.kind
    if kind is SummandKind.UP:
        return Interval(k, a, b, True, False)
    if kind is SummandKind.UP_INF:
        return Interval(k, a, lam, True, False)
    if kind is SummandKind.NE:
        return Interval(k - 1, -lam, a, False, False)
    if kind is SummandKind.DOWN:
        return Interval(k, b, a, False, True)
    if kind is SummandKind.DOWN_NEG_INF:
        return Interval(k, -lam, a, False, True)
    if kind is SummandKind.SE:
        return Interval(k - 1, a, lam, False, False)
    if kind is SummandKind.GT:
        # a is the down-level, b the up-level
        if b <= a:
            return Interval(k, b, a, True, True)
        return Interval(k - 1, a, b, False, False)
    return Interval(k - 1, -lam, lam, False, False)


def interval_of_point(p: StripPoint) -> Interval:
    return interval_of_summand(summand_of_point(p), p.lam)


class Barcode:
    def __init__(self, intervals: Sequence[Interval], lam):
        self.lam = Fraction(lam)
        self.intervals: List[Interval] = sorted(intervals, key=Interval.sort_key)

    def in_degree(self, k: int) -> List[Interval]:
        return [i for i in self.intervals if i.degree == k]

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Barcode):
            return NotImplemented
        return self.lam == other.lam and sorted(map(str, self)) == sorted(map(str, other))

    def __str__(self) -> str:
        return "\n".join(str(i) for i in self.intervals)


def barcode_of_summands(summands: Sequence[Summand], lam) -> Barcode:
    return Barcode([interval_of_summand(s, lam) for s in summands], lam)


def barcode_of(d, lam: Optional[Fraction] = None) -> Barcode:
    """Level-set barcode of a decomposition."""
    lam = d.cospan.lam if lam is None else Fraction(lam)
    return barcode_of_summands(d.summands, lam)
