"""The eight standard elementary summands and their literal cospans."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from ..algebra import Field, SparseMatrix, field_from_name
from ..complex import ChainComplex, FilteredComplex, Flavor, Level, format_level
from ..config import Config
from ..errors import SummandError
from .model import FilteredCospan


class SummandKind(str, Enum):
    UP = "Up"
    DOWN = "Down"
    UP_INF = "UpInf"
    DOWN_NEG_INF = "DownNegInf"
    NE = "NE"
    SE = "SE"
    GT = "GT"
    BOX = "Box"

    @property
    def rank(self) -> int:
        return list(SummandKind).index(self)


ONE_PARAMETER = {SummandKind.UP_INF, SummandKind.DOWN_NEG_INF, SummandKind.NE, SummandKind.SE}
TWO_PARAMETERS = {SummandKind.UP, SummandKind.DOWN, SummandKind.GT}


@dataclass(frozen=True)
class Summand:
    """
    A standard elementary summand in degree k.

    Up(a, b) and Down(a, b) carry birth a and death b of their pair. GT
    carries its down-level as a and its up-level as b, so its diagram
    point is T^-k(a, b). The one-parameter kinds use a only.
    """

    kind: SummandKind
    degree: int
    a: Optional[Level] = None
    b: Optional[Level] = None

    @classmethod
    def gt(cls, degree: int, up: Level, down: Level) -> "Summand":
        return cls(SummandKind.GT, degree, down, up)

    @property
    def up_level(self) -> Optional[Level]:
        if self.kind in (SummandKind.UP_INF, SummandKind.NE):
            return self.a
        if self.kind is SummandKind.GT:
            return self.b
        return None

    @property
    def down_level(self) -> Optional[Level]:
        if self.kind in (SummandKind.DOWN_NEG_INF, SummandKind.SE, SummandKind.GT):
            return self.a
        return None

    def check(self, lam) -> None:
        """Raise SummandError unless the parameters fit the kind and the bound."""
        lam = Fraction(lam)
        kind, a, b = self.kind, self.a, self.b

        def inside(v):
            return v is not None and -lam < v < lam

        if kind is SummandKind.BOX:
            if a is not None or b is not None:
                raise SummandError("Box takes no parameters")
            return
        if kind in ONE_PARAMETER:
            if b is not None or not inside(a):
                raise SummandError(f"{kind.value} needs one level inside (-{lam}, {lam}), got {a}")
            return
        if not (inside(a) and inside(b)):
            raise SummandError(f"{kind.value} needs two levels inside (-{lam}, {lam}), got {a}, {b}")
        if kind is SummandKind.UP and not a < b:
            raise SummandError(f"Up needs a < b, got {a}, {b}")
        if kind is SummandKind.DOWN and not a > b:
            raise SummandError(f"Down needs a > b, got {a}, {b}")

    def sort_key(self):
        a = self.a if self.a is not None else 0
        b = self.b if self.b is not None else 0
        return (self.kind.rank, self.degree, a, b)

    def __lt__(self, other: "Summand") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        head = f"{self.kind.value} k={self.degree}"
        if self.kind is SummandKind.BOX:
            return head
        if self.kind is SummandKind.GT:
            return f"{head} up={format_level(self.b)} down={format_level(self.a)}"
        if self.kind in ONE_PARAMETER:
            return f"{head} a={format_level(self.a)}"
        return f"{head} a={format_level(self.a)} b={format_level(self.b)}"


def _one(field: Field) -> SparseMatrix:
    return SparseMatrix.identity(1, field)


def _complex(field, flavor, lam, gens=None, levels=None, bds=None) -> FilteredComplex:
    return FilteredComplex(field, flavor, lam, gens or {}, levels or {}, bds or {})


def standard_summand(s: Summand, field: Optional[Field] = None, lam=None) -> FilteredCospan:
    """
    Build the literal cospan of a summand.

    Args:
        s: The summand
        field: Coefficient field (defaults to Config.DEFAULT_FIELD)
        lam: The bound (defaults to Config.DEFAULT_LAMBDA)

    Returns:
        The cospan whose only pieces are those of the summand
    """
    field = field or field_from_name(Config.DEFAULT_FIELD)
    lam = Fraction(Config.DEFAULT_LAMBDA if lam is None else lam)
    s.check(lam)
    k, kind = s.degree, s.kind
    asc, desc = Flavor.ASCENDING, Flavor.DESCENDING
    up = _complex(field, asc, lam)
    down = _complex(field, desc, lam)
    mid = ChainComplex(field)
    psi_up, psi_down = {}, {}

    if kind in (SummandKind.UP, SummandKind.DOWN):
        pair = _complex(field, asc if kind is SummandKind.UP else desc, lam,
                        {k: ["x"], k + 1: ["y"]}, {k: [s.a], k + 1: [s.b]},
                        {k + 1: _one(field)})
        if kind is SummandKind.UP:
            up = pair
        else:
            down = pair
    else:
        if s.up_level is not None:
            up = _complex(field, asc, lam, {k: ["u"]}, {k: [s.up_level]})
        if s.down_level is not None:
            down = _complex(field, desc, lam, {k: ["w"]}, {k: [s.down_level]})
        if kind in (SummandKind.NE, SummandKind.SE, SummandKind.GT, SummandKind.BOX):
            mid = ChainComplex(field, {k: ["d"]})
            if up.total_dim:
                psi_up = {k: _one(field)}
            if down.total_dim:
                psi_down = {k: _one(field)}
    return FilteredCospan(up, down, mid, psi_up, psi_down)
