"""Exception hierarchy shared by every package in the library."""

from typing import List, Optional


class CospanError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(CospanError):
    """Two operands live over different coefficient fields."""


class DimensionError(CospanError):
    """Matrix or vector shapes do not line up."""


class ChainComplexError(CospanError):
    """A boundary operator does not square to zero, or a map is not a chain map."""


class FiltrationError(CospanError):
    """A level or a map violates the filtration."""


class LambdaMismatchError(CospanError):
    """Objects built for different bounds were combined."""


class SummandError(CospanError):
    """Summand parameters violate the constraints of their kind."""


class StripError(CospanError):
    """A point lies outside the strip."""


class OrderError(CospanError):
    """Points were expected to be comparable in the strip order but are not."""


class OrthogonalityError(CospanError):
    """A constructed basis failed the orthogonality test."""


class SingularMapError(CospanError):
    """A map expected to be invertible is not."""


class ValidationError(CospanError):
    """A cospan failed validation; `violations` lists every problem found."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        summary = "; ".join(self.violations[:3])
        if len(self.violations) > 3:
            summary += f" (+{len(self.violations) - 3} more)"
        super().__init__(f"invalid cospan: {summary}")


class ParseError(CospanError):
    """Input text could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
