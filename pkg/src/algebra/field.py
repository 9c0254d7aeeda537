"""
Exact coefficient fields.

Two kinds of field are supported: prime fields F_p, whose elements are
ints in [0, p), and the rationals Q, whose elements are normalized
`fractions.Fraction` values.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any

from sympy import isprime

from ..errors import FieldMismatchError, ParseError

Scalar = Any

MAX_PRIME = 2 ** 31


class Field(ABC):
    """Arithmetic of one coefficient field."""

    characteristic: int = 0

    @property
    @abstractmethod
    def name(self) -> str:
        """Short name used in files: `F<p>` or `Q`."""

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    @abstractmethod
    def coerce(self, value) -> Scalar:
        """Convert an int, Fraction or scalar of this field into a scalar."""

    @abstractmethod
    def inv(self, a: Scalar) -> Scalar:
        """Multiplicative inverse; a must be nonzero."""

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.coerce(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.coerce(a - b)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.coerce(a * b)

    def neg(self, a: Scalar) -> Scalar:
        return self.coerce(-a)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def parse(self, token: str) -> Scalar:
        """Parse an integer or `p/q` token."""
        try:
            return self.coerce(Fraction(token))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad scalar {token!r} for field {self.name}") from e

    def format(self, a: Scalar) -> str:
        return str(a)

    def check_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError(f"field mismatch: {self.name} vs {other.name}")

    def __repr__(self) -> str:
        return self.name


class PrimeField(Field):
    """The prime field F_p with representatives in [0, p)."""

    def __init__(self, p: int):
        """
        Initialize F_p.

        Args:
            p: A prime below 2**31
        """
        if p >= MAX_PRIME or not isprime(p):
            raise ValueError(f"{p} is not a supported prime")
        self.p = p
        self.characteristic = p

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def coerce(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldMismatchError(f"{value} has no image in {self.name}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return pow(a, -1, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))


class Rationals(Field):
    """The rationals, with exact normalized fractions."""

    @property
    def name(self) -> str:
        return "Q"

    def coerce(self, value) -> Fraction:
        return Fraction(value)

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in Q")
        return 1 / Fraction(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")


QQ = Rationals()


def field_from_name(name: str) -> Field:
    """
    Resolve a field name.

    Args:
        name: `Q` or `F<p>` (for example `F2`, `F5`)

    Returns:
        The corresponding Field
    """
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        try:
            return PrimeField(int(name[1:]))
        except ValueError as e:
            raise ParseError(str(e)) from e
    raise ParseError(f"unknown field {name!r}")
