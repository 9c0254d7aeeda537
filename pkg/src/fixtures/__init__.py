from .catalog import (
    BARCODES,
    EXPECTED,
    LAMBDA,
    boundary_example,
    boundary_simplicial,
    cubic,
    horn,
    morse_endpoint,
    morse_summary,
    named,
    trivial_morse,
)
from .generators import (
    random_cospan,
    random_diagram,
    random_level,
    random_simplicial,
    random_summand,
    random_summands,
    scramble,
)

__all__ = [
    "BARCODES",
    "EXPECTED",
    "LAMBDA",
    "boundary_example",
    "boundary_simplicial",
    "cubic",
    "horn",
    "morse_endpoint",
    "morse_summary",
    "named",
    "trivial_morse",
    "random_cospan",
    "random_diagram",
    "random_level",
    "random_simplicial",
    "random_summand",
    "random_summands",
    "scramble",
]
