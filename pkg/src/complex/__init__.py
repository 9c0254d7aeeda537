from .levels import (
    NEG_INF,
    POS_INF,
    FlowLevel,
    Level,
    compare_levels,
    format_level,
    format_rational,
    level_value,
    make_flow_level,
    parse_level,
    parse_rational,
)
from .chain import ChainComplex, ChainMap, Homology
from .filtered import (
    FilteredComplex,
    Flavor,
    filtration_of,
    is_orthogonal_basis,
    spectral_invariant,
)
from .persistence import DegreeBases, FilteredDecomposition, IntervalModule, decompose_filtered

__all__ = [
    "NEG_INF",
    "POS_INF",
    "FlowLevel",
    "Level",
    "compare_levels",
    "format_level",
    "format_rational",
    "level_value",
    "make_flow_level",
    "parse_level",
    "parse_rational",
    "ChainComplex",
    "ChainMap",
    "Homology",
    "FilteredComplex",
    "Flavor",
    "filtration_of",
    "is_orthogonal_basis",
    "spectral_invariant",
    "DegreeBases",
    "FilteredDecomposition",
    "IntervalModule",
    "decompose_filtered",
]
