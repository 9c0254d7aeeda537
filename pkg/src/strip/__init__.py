from .homeomorphism import (
    Homeomorphism,
    ArctanHomeomorphism,
    RationalHomeomorphism,
    TableHomeomorphism,
    homeomorphism,
    parse_knots,
)
from .geometry import (
    Cell,
    Region,
    StripPoint,
    T,
    T_inverse,
    base_point,
    chart,
    classify,
    flow_point,
    from_chart,
    leq,
    sampled_leq,
    sampled_strictly_less,
    strictly_less,
    tolerance,
)
from .metric import (
    INF,
    d_boundary,
    d_boundary_bisect,
    d_int,
    d_int_bisect,
    xi_chart,
)

__all__ = [
    "Homeomorphism",
    "ArctanHomeomorphism",
    "RationalHomeomorphism",
    "TableHomeomorphism",
    "homeomorphism",
    "parse_knots",
    "Cell",
    "Region",
    "StripPoint",
    "T",
    "T_inverse",
    "base_point",
    "chart",
    "classify",
    "flow_point",
    "from_chart",
    "leq",
    "sampled_leq",
    "sampled_strictly_less",
    "strictly_less",
    "tolerance",
    "INF",
    "d_boundary",
    "d_boundary_bisect",
    "d_int",
    "d_int_bisect",
    "xi_chart",
]
