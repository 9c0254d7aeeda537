from .functor import (
    Oracle,
    PointComplex,
    eval_F0,
    h0_dim,
    homotopic_case_h,
    induced_map,
    structure_case,
    structure_map,
    structure_rank,
)
from .sampling import (
    boundary_points,
    copy_range,
    grid_values,
    sample_grid,
    sample_pairs,
    sample_rectangles,
)
from .verify import (
    VerifyReport,
    expected_rank,
    verify_blocks,
    verify_boundary,
    verify_decomposition,
    verify_exactness,
    verify_functoriality,
)

__all__ = [
    "Oracle",
    "PointComplex",
    "eval_F0",
    "h0_dim",
    "homotopic_case_h",
    "induced_map",
    "structure_case",
    "structure_map",
    "structure_rank",
    "boundary_points",
    "copy_range",
    "grid_values",
    "sample_grid",
    "sample_pairs",
    "sample_rectangles",
    "VerifyReport",
    "expected_rank",
    "verify_blocks",
    "verify_boundary",
    "verify_decomposition",
    "verify_exactness",
    "verify_functoriality",
]
