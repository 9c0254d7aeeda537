from .model import FilteredCospan, conjugate_cospan, direct_sum, flow_shift, validate, zero_cospan
from .summands import Summand, SummandKind, standard_summand
from .morphism import (
    CospanMorphism,
    boundary_interleaving,
    coboundary_witness,
    compose,
    differential,
    direct_sum_morphism,
    identity_morphism,
    interleaving_violations,
    shape_identity,
    summand_interleaving,
    verify_interleaving,
    zero_morphism,
)
from .io import format_cospan, parse_cospan, read_cospan, write_cospan

__all__ = [
    "FilteredCospan",
    "conjugate_cospan",
    "direct_sum",
    "flow_shift",
    "validate",
    "zero_cospan",
    "Summand",
    "SummandKind",
    "standard_summand",
    "CospanMorphism",
    "boundary_interleaving",
    "coboundary_witness",
    "compose",
    "differential",
    "direct_sum_morphism",
    "identity_morphism",
    "interleaving_violations",
    "shape_identity",
    "summand_interleaving",
    "verify_interleaving",
    "zero_morphism",
    "format_cospan",
    "parse_cospan",
    "read_cospan",
    "write_cospan",
]
