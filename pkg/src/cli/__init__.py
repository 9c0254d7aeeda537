from .commands import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, build_parser, format_distance, load_cospan, run

__all__ = [
    "EXIT_INPUT",
    "EXIT_MISMATCH",
    "EXIT_OK",
    "build_parser",
    "format_distance",
    "load_cospan",
    "run",
]
