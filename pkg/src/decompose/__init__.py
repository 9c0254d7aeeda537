from .induced import homology_induced_map, match_filtered_iso
from .recipe import (
    Decomposition,
    DegreeWitness,
    LegClasses,
    check_conditions,
    decompose,
    homology_counts,
)

__all__ = [
    "homology_induced_map",
    "match_filtered_iso",
    "Decomposition",
    "DegreeWitness",
    "LegClasses",
    "check_conditions",
    "decompose",
    "homology_counts",
]
