from .pinned import Simplex, SimplicialInput, build_pinned_cospan, perturb, relabel
from .scx import format_scx, parse_scx, read_scx, write_scx

__all__ = [
    "Simplex",
    "SimplicialInput",
    "build_pinned_cospan",
    "perturb",
    "relabel",
    "format_scx",
    "parse_scx",
    "read_scx",
    "write_scx",
]
