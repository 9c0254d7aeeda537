"""
Interleaving distance on the strip and distance to its boundary.

Within one cell the flow is a translation of the xi-chart coordinates, so
the distance is the l-infinity distance there. Points in different cells
are infinitely far apart, except that interior points of L and A may reach
the boundary piece of their own copy.
"""

import math
from fractions import Fraction
from typing import Tuple, Union

from ..config import Config
from .geometry import Region, StripPoint, T, chart, flow_point, leq
from .homeomorphism import Homeomorphism

Distance = Union[float, Fraction]

INF = math.inf

_OPEN_CELLS = {Region.L_INTERIOR, Region.A_INTERIOR}


def xi_chart(p: StripPoint, phi: Homeomorphism) -> Tuple:
    """The chart coordinates of p pushed through xi = phi^-1."""
    c1, c2 = chart(p)
    return phi.xi(c1), phi.xi(c2)


def _gap(a, b):
    if a == b:
        return 0
    return abs(a - b)


def _same_cell(v: StripPoint, w: StripPoint) -> bool:
    cv, cw = v.cell, w.cell
    if cv.k != cw.k or cv.chart != cw.chart:
        return False
    if cv.region == cw.region:
        return True
    pair = {cv.region, cw.region}
    return Region.BOUNDARY in pair and bool(pair & _OPEN_CELLS)


def d_int(v: StripPoint, w: StripPoint, phi: Homeomorphism) -> Distance:
    """
    Interleaving distance between two points of the strip.

    Args:
        v: First point
        w: Second point
        phi: Homeomorphism defining the flow

    Returns:
        The l-infinity distance of xi-chart coordinates for points of the
        same cell, with matching infinite coordinates contributing 0; inf
        otherwise
    """
    phi.check_lambda(v.lam)
    if v == w:
        return 0
    if not _same_cell(v, w):
        return INF
    a, b = xi_chart(v, phi), xi_chart(w, phi)
    return max(_gap(a[0], b[0]), _gap(a[1], b[1]))


def d_boundary(v: StripPoint, phi: Homeomorphism) -> Distance:
    """
    Distance from v to the boundary of the strip.

    Returns:
        0 on the boundary, half the chart gap on L and A interiors, inf elsewhere
    """
    phi.check_lambda(v.lam)
    region = v.cell.region
    if region is Region.BOUNDARY:
        return 0
    if region not in _OPEN_CELLS:
        return INF
    # in both charts the boundary is the diagonal c1 = c2 and interior points have c1 < c2
    u1, u2 = xi_chart(v, phi)
    return (u2 - u1) / 2


def _bisect(holds, steps: int, upper: float = 1e6) -> float:
    """Least eps in [0, upper] where the monotone predicate `holds` turns true."""
    if holds(0.0):
        return 0.0
    hi = 1.0
    while not holds(hi):
        hi *= 2
        if hi > upper:
            return INF
    lo = 0.0
    for _ in range(steps):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if holds(mid):
            hi = mid
        else:
            lo = mid
    return hi


def d_int_bisect(v: StripPoint, w: StripPoint, phi: Homeomorphism,
                 steps: int = Config.BISECTION_STEPS) -> float:
    """d_int from its definition: least eps with v <= flow(w, eps) and w <= flow(v, eps)."""
    return _bisect(lambda e: leq(v, flow_point(w, e, phi)) and leq(w, flow_point(v, e, phi)), steps)


def d_boundary_bisect(v: StripPoint, phi: Homeomorphism,
                      steps: int = Config.BISECTION_STEPS) -> float:
    """d_boundary from the criterion: least eps with flow(v, 2 eps) not <= T(v)."""
    target = T(v)
    return _bisect(lambda e: not leq(flow_point(v, 2 * e, phi), target), steps)
