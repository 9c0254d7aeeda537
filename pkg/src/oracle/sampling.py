"""Sample points, comparable pairs and rectangles of the strip for the oracle checks."""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..complex import level_value
from ..cospan import FilteredCospan
from ..strip import Cell, Region, StripPoint, T, from_chart, sampled_leq

logger = logging.getLogger(__name__)

Pair = Tuple[StripPoint, StripPoint]


def grid_values(c: FilteredCospan) -> List:
    """
    Chart coordinates worth probing: every generator level, the bounds,
    midpoints between neighbours and a value just inside each bound.
    """
    lam = c.lam
    values = {lam, -lam, lam * Fraction(15, 16), -lam * Fraction(15, 16)}
    for cx in (c.up, c.down):
        for lvs in cx.levels.values():
            for lv in lvs:
                v = level_value(lv)
                if -lam <= v <= lam:
                    values.add(v)
    ordered = sorted(values, key=float)
    mids = [(a + b) / 2 for a, b in zip(ordered, ordered[1:])]
    return sorted(set(ordered) | set(mids), key=float)


def copy_range(c: FilteredCospan) -> range:
    """Copies T^k of the fundamental domain that can carry a summand's support."""
    degrees = c.degrees or [0]
    return range(-max(degrees) - 2, -min(degrees) + 3)


def _chart_ok(name: str, c1, c2, lam) -> bool:
    if name == "S":
        return -lam < c1 <= lam and -lam <= c2 < lam
    if name == "L":
        return -lam <= c1 <= c2 < lam
    return -lam < c1 <= c2 <= lam


def sample_grid(c: FilteredCospan, values: Optional[Sequence] = None,
                copies: Optional[Sequence[int]] = None) -> List[StripPoint]:
    """
    Grid points of every chart in every relevant copy.

    Args:
        c: The cospan whose levels drive the grid
        values: Chart coordinates to use (defaults to `grid_values`)
        copies: Powers of T to visit (defaults to `copy_range`)

    Returns:
        Points carrying the cell they were built in
    """
    lam = c.lam
    values = grid_values(c) if values is None else list(values)
    copies = copy_range(c) if copies is None else copies
    points = []
    for k in copies:
        for name in ("S", "L", "A"):
            cell = Cell(k, Region.S_INTERIOR, name)
            for c1 in values:
                for c2 in values:
                    if _chart_ok(name, c1, c2, lam):
                        points.append(from_chart(cell, c1, c2, lam))
    logger.debug("grid of %d points over copies %s", len(points), list(copies))
    return points


def boundary_points(c: FilteredCospan, values: Optional[Sequence] = None,
                    copies: Optional[Sequence[int]] = None) -> List[StripPoint]:
    """Points of both boundary lines, x + y = -2 lam and x + y = 2 lam."""
    lam = c.lam
    values = grid_values(c) if values is None else list(values)
    copies = copy_range(c) if copies is None else copies
    points = []
    for k in copies:
        lower, upper = Cell(k, Region.BOUNDARY, "L"), Cell(k, Region.BOUNDARY, "A")
        for v in values:
            if -lam <= v < lam:
                points.append(from_chart(lower, v, v, lam))
            if -lam < v <= lam:
                points.append(from_chart(upper, v, v, lam))
    return points


def _coords(points: Sequence[StripPoint]) -> Tuple[np.ndarray, np.ndarray]:
    xs = np.array([float(p.x) for p in points])
    ys = np.array([float(p.y) for p in points])
    return xs, ys


def sample_pairs(points: Sequence[StripPoint], n: int, rng: np.random.Generator) -> List[Pair]:
    """
    Random comparable pairs v <= w drawn from a point set.

    Args:
        points: Candidate points
        n: Number of pairs
        rng: Seeded generator

    Returns:
        Up to n pairs; a point with nothing above it is paired with itself
    """
    if not points:
        return []
    xs, ys = _coords(points)
    pairs = []
    for _ in range(n):
        v = points[int(rng.integers(len(points)))]
        mask = (xs <= float(v.x)) & (ys >= float(v.y))
        above = [points[i] for i in np.flatnonzero(mask) if sampled_leq(v, points[i])]
        w = above[int(rng.integers(len(above)))] if above else v
        pairs.append((v, w))
    return pairs


def sample_rectangles(points: Sequence[StripPoint], n: int,
                      rng: np.random.Generator) -> List[Pair]:
    """Random (s, t) <= (u, v) <= T(s, t) drawn from a point set."""
    if not points:
        return []
    xs, ys = _coords(points)
    rects = []
    attempts = 0
    while len(rects) < n and attempts < 20 * n:
        attempts += 1
        st = points[int(rng.integers(len(points)))]
        top = T(st)
        mask = (xs <= float(st.x)) & (ys >= float(st.y)) & (xs >= float(top.x)) & (ys <= float(top.y))
        inside = [points[i] for i in np.flatnonzero(mask)
                  if sampled_leq(st, points[i]) and sampled_leq(points[i], top)]
        if inside:
            rects.append((st, inside[int(rng.integers(len(inside)))]))
    return rects
