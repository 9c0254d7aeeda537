"""
Increasing homeomorphisms phi: [-inf, inf] -> [-lam, lam] and the flows
rho_s(t) = phi(s + phi^-1(t)) they induce on levels and coordinates.
"""

import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from ..complex.levels import (
    NEG_INF,
    POS_INF,
    FlowLevel,
    Level,
    arctan_phi,
    arctan_xi,
    make_flow_level,
)
from ..config import Config
from ..errors import LambdaMismatchError

Number = Union[Fraction, float]


def exact(s) -> Fraction:
    """Exact rational form of a flow parameter."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(repr(float(s)))


class Homeomorphism(ABC):
    """Base class for the supported homeomorphism families."""

    kind: str = ""

    def __init__(self, lam):
        """
        Initialize the homeomorphism.

        Args:
            lam: The bound; phi(+-inf) = +-lam
        """
        self.lam = Fraction(lam)
        if self.lam <= 0:
            raise ValueError("lambda must be positive")

    @abstractmethod
    def xi(self, t: Number) -> Number:
        """phi^-1(t); +-inf at +-lam."""

    @abstractmethod
    def phi(self, u: Number) -> Number:
        """phi(u); +-lam at +-inf."""

    def rho_value(self, s, t: Number) -> Number:
        """Flow a coordinate: phi(s + xi(t)). The bound is fixed."""
        if t >= self.lam or t <= -self.lam:
            return t
        u = self.xi(t)
        if isinstance(u, float):
            return self.phi(u + float(s))
        return self.phi(u + exact(s))

    def rho(self, s, level: Level) -> Level:
        """Flow a filtration level exactly."""
        if isinstance(level, float):
            return level
        return self.rho_value(exact(s), level)

    def check_lambda(self, lam) -> None:
        if Fraction(lam) != self.lam:
            raise LambdaMismatchError(f"homeomorphism built for {self.lam}, used with {lam}")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(lam={self.lam})"


class ArctanHomeomorphism(Homeomorphism):
    """phi(u) = lam (2/pi) arctan(u), the default family."""

    kind = "arctan"

    def xi(self, t: Number) -> float:
        if isinstance(t, FlowLevel):
            return t.xi
        if isinstance(t, float):
            if t >= self.lam:
                return POS_INF
            if t <= -self.lam:
                return NEG_INF
            return math.tan(math.pi * t / (2 * float(self.lam)))
        return arctan_xi(Fraction(t), self.lam)

    def phi(self, u: Number) -> float:
        return arctan_phi(float(u), self.lam)

    def rho(self, s, level: Level) -> Level:
        if isinstance(level, float):
            return level
        if isinstance(level, FlowLevel):
            self.check_lambda(level.lam)
            return level.flowed(exact(s))
        return make_flow_level(level, exact(s), self.lam)


class RationalHomeomorphism(Homeomorphism):
    """phi(u) = lam u / (1 + |u|); exact on rationals."""

    kind = "rational"

    def xi(self, t: Number) -> Number:
        if t >= self.lam:
            return POS_INF
        if t <= -self.lam:
            return NEG_INF
        if isinstance(t, float):
            return t / (float(self.lam) - abs(t))
        t = Fraction(t)
        return t / (self.lam - abs(t))

    def phi(self, u: Number) -> Number:
        if u == POS_INF:
            return self.lam
        if u == NEG_INF:
            return -self.lam
        if isinstance(u, float):
            return float(self.lam) * u / (1 + abs(u))
        return self.lam * u / (1 + abs(u))


class TableHomeomorphism(Homeomorphism):
    """
    Piecewise linear through rational knots (u_i, t_i), with the rational
    tails t = lam - (lam - t_n) / (1 + u - u_n) beyond the last knot and the
    mirror image before the first.
    """

    kind = "table"

    def __init__(self, lam, knots: Sequence[Tuple]):
        """
        Initialize from knots.

        Args:
            lam: The bound
            knots: (u, t) pairs, strictly increasing in both, with |t| < lam
        """
        super().__init__(lam)
        pts: List[Tuple[Fraction, Fraction]] = [(Fraction(u), Fraction(t)) for u, t in knots]
        if not pts:
            raise ValueError("table homeomorphism needs at least one knot")
        for (u0, t0), (u1, t1) in zip(pts, pts[1:]):
            if not (u1 > u0 and t1 > t0):
                raise ValueError("knots must increase strictly in both coordinates")
        if any(abs(t) >= self.lam for _, t in pts):
            raise ValueError("knot values must lie strictly inside (-lam, lam)")
        self.knots = pts

    def phi(self, u: Number) -> Number:
        if u == POS_INF:
            return self.lam
        if u == NEG_INF:
            return -self.lam
        conv = float if isinstance(u, float) else Fraction
        lam = conv(self.lam)
        (u_first, t_first), (u_last, t_last) = self.knots[0], self.knots[-1]
        if u >= u_last:
            return lam - (lam - conv(t_last)) / (1 + u - conv(u_last))
        if u <= u_first:
            return -lam + (conv(t_first) + lam) / (1 + conv(u_first) - u)
        for (u0, t0), (u1, t1) in zip(self.knots, self.knots[1:]):
            if u0 <= u <= u1:
                return conv(t0) + (conv(t1) - conv(t0)) * (u - conv(u0)) / (conv(u1) - conv(u0))
        raise AssertionError("unreachable")

    def xi(self, t: Number) -> Number:
        if t >= self.lam:
            return POS_INF
        if t <= -self.lam:
            return NEG_INF
        conv = float if isinstance(t, float) else Fraction
        lam = conv(self.lam)
        (u_first, t_first), (u_last, t_last) = self.knots[0], self.knots[-1]
        if t >= t_last:
            return conv(u_last) + (lam - conv(t_last)) / (lam - t) - 1
        if t <= t_first:
            return conv(u_first) - (conv(t_first) + lam) / (t + lam) + 1
        for (u0, t0), (u1, t1) in zip(self.knots, self.knots[1:]):
            if t0 <= t <= t1:
                return conv(u0) + (conv(u1) - conv(u0)) * (t - conv(t0)) / (conv(t1) - conv(t0))
        raise AssertionError("unreachable")


def parse_knots(text: str) -> List[Tuple[Fraction, Fraction]]:
    """Read knots written `u:t,u:t,...`."""
    knots = []
    for item in text.split(","):
        parts = item.strip().split(":")
        if len(parts) != 2:
            raise ValueError(f"knots are written u:t, got {item.strip()!r}")
        knots.append((Fraction(parts[0].strip()), Fraction(parts[1].strip())))
    return knots


def homeomorphism(kind: str, lam, knots: Optional[Sequence[Tuple]] = None) -> Homeomorphism:
    """
    Build a homeomorphism by kind name.

    Args:
        kind: `arctan`, `rational` or `table`
        lam: The bound
        knots: Knots of a `table` homeomorphism (default from COSPAN_PHI_KNOTS)

    Returns:
        The Homeomorphism instance
    """
    if kind == "arctan":
        return ArctanHomeomorphism(lam)
    if kind == "rational":
        return RationalHomeomorphism(lam)
    if kind == "table":
        return TableHomeomorphism(lam, parse_knots(Config.PHI_KNOTS) if knots is None else knots)
    raise ValueError(f"unknown homeomorphism kind {kind!r}; choose one of {', '.join(Config.PHI_KINDS)}")
