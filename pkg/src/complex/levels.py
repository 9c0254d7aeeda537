"""
Filtration levels.

A level is normally an exact `Fraction`. Flowing a rational level under the
arctan homeomorphism gives a transcendental number, kept symbolically as a
`FlowLevel`: the value phi(xi(base) + shift), where xi = phi^-1. Infinite
levels (the filtration of a zero vector) are the floats +-inf.
"""

import math
from fractions import Fraction
from typing import Tuple, Union

import sympy

from ..errors import LambdaMismatchError, ParseError

NEG_INF = float("-inf")
POS_INF = float("inf")

# relative gap below which float comparisons of xi-values defer to sympy
_FLOAT_MARGIN = 1e-9
_EVALF_DIGITS = 60


def arctan_xi(t: Fraction, lam: Fraction) -> float:
    """xi(t) = tan(pi t / 2 lam), with +-lam sent to +-inf."""
    if t >= lam:
        return POS_INF
    if t <= -lam:
        return NEG_INF
    return math.tan(math.pi * float(t) / (2 * float(lam)))


def arctan_phi(u: float, lam: Fraction) -> float:
    """phi(u) = lam (2/pi) arctan(u)."""
    return float(lam) * 2.0 / math.pi * math.atan(u)


class FlowLevel:
    """The level phi(xi(base) + shift) for the arctan homeomorphism with bound lam."""

    __slots__ = ("base", "shift", "lam")

    def __init__(self, base: Fraction, shift: Fraction, lam: Fraction):
        self.base = Fraction(base)
        self.shift = Fraction(shift)
        self.lam = Fraction(lam)

    # numeric views

    @property
    def xi(self) -> float:
        """Approximate xi-coordinate of this level."""
        return arctan_xi(self.base, self.lam) + float(self.shift)

    def __float__(self) -> float:
        return arctan_phi(self.xi, self.lam)

    def xi_expr(self) -> sympy.Expr:
        lam = sympy.Rational(self.lam.numerator, self.lam.denominator)
        base = sympy.Rational(self.base.numerator, self.base.denominator)
        shift = sympy.Rational(self.shift.numerator, self.shift.denominator)
        return sympy.tan(sympy.pi * base / (2 * lam)) + shift

    # algebra

    def __neg__(self) -> "FlowLevel":
        return FlowLevel(-self.base, -self.shift, self.lam)

    def flowed(self, s: Fraction) -> "Level":
        return make_flow_level(self.base, self.shift + Fraction(s), self.lam)

    # comparisons

    def _cmp(self, other) -> int:
        return compare_levels(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (FlowLevel, Fraction, int, float)):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __hash__(self) -> int:
        # equal values can have different (base, shift) forms
        return hash(("flow", self.lam))

    def __str__(self) -> str:
        return f"{format_rational(self.base)}@{format_rational(self.shift)}"

    def __repr__(self) -> str:
        return f"FlowLevel({self})"


Level = Union[Fraction, FlowLevel, float]

_RATIONAL_TAN = {Fraction(0): Fraction(0), Fraction(1, 2): Fraction(1), Fraction(-1, 2): Fraction(-1)}


def make_flow_level(base: Fraction, shift: Fraction, lam: Fraction) -> Level:
    """
    Canonical form of phi(xi(base) + shift).

    Returns a plain Fraction whenever the value is rational.
    """
    base, shift, lam = Fraction(base), Fraction(shift), Fraction(lam)
    if shift == 0:
        return base
    if abs(base) >= lam:
        return base
    xi_base = _RATIONAL_TAN.get(base / lam)
    if xi_base is None:
        return FlowLevel(base, shift, lam)
    u = xi_base + shift
    if u == 0:
        return Fraction(0)
    if abs(u) == 1:
        return lam / 2 * u
    return FlowLevel(Fraction(0), u, lam)


def _as_pair(level) -> Tuple[Fraction, Fraction]:
    if isinstance(level, FlowLevel):
        return level.base, level.shift
    return Fraction(level), Fraction(0)


def compare_levels(a: Level, b: Level) -> int:
    """Three-way comparison of levels, exact for rationals and flowed levels."""
    if isinstance(a, float) or isinstance(b, float):
        fa, fb = float(a), float(b)
        return (fa > fb) - (fa < fb)
    if not isinstance(a, FlowLevel) and not isinstance(b, FlowLevel):
        return (a > b) - (a < b)
    lam = a.lam if isinstance(a, FlowLevel) else b.lam
    if isinstance(a, FlowLevel) and isinstance(b, FlowLevel) and a.lam != b.lam:
        raise LambdaMismatchError(f"levels flowed with different bounds {a.lam} and {b.lam}")
    # rationals at the bound sit beyond every flowed level
    for value, sign in ((a, 1), (b, -1)):
        if not isinstance(value, FlowLevel):
            if value >= lam:
                return sign
            if value <= -lam:
                return -sign
    base_a, shift_a = _as_pair(a)
    base_b, shift_b = _as_pair(b)
    if base_a == base_b:
        return (shift_a > shift_b) - (shift_a < shift_b)
    ua = arctan_xi(base_a, lam) + float(shift_a)
    ub = arctan_xi(base_b, lam) + float(shift_b)
    if abs(ua - ub) > _FLOAT_MARGIN * max(1.0, abs(ua), abs(ub)):
        return 1 if ua > ub else -1
    ea = FlowLevel(base_a, shift_a, lam).xi_expr()
    eb = FlowLevel(base_b, shift_b, lam).xi_expr()
    diff = ea - eb
    if diff.equals(0):
        return 0
    return 1 if diff.evalf(_EVALF_DIGITS) > 0 else -1


def level_value(level: Level) -> Union[Fraction, float]:
    """Exact rational value when available, else a float."""
    if isinstance(level, FlowLevel):
        return float(level)
    return level


def format_rational(q) -> str:
    """Print a rational as `p` or `p/q` in lowest terms."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_level(level: Level) -> str:
    if isinstance(level, FlowLevel):
        return str(level)
    if isinstance(level, float):
        if math.isinf(level):
            return "inf" if level > 0 else "-inf"
        return repr(level)
    return format_rational(level)


def parse_rational(token: str, line=None) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational {token!r}", line) from e


def parse_level(token: str, lam: Fraction, line=None) -> Level:
    """Inverse of `format_level`."""
    if token == "inf":
        return POS_INF
    if token == "-inf":
        return NEG_INF
    if "@" in token:
        base, shift = token.split("@", 1)
        return make_flow_level(parse_rational(base, line), parse_rational(shift, line), lam)
    return parse_rational(token, line)
