"""
Checks that certify a decomposition against brute-force evaluation.

Each check returns a list of human-readable violations; an empty list
means the check passed.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra import SparseMatrix, rank
from ..config import Config
from ..cospan import FilteredCospan
from ..diagram import Diagram, diagram_of
from ..errors import OrderError
from ..strip import StripPoint, T, sampled_leq, sampled_strictly_less
from .functor import Oracle, structure_case
from .sampling import Pair, boundary_points, sample_grid, sample_pairs, sample_rectangles

logger = logging.getLogger(__name__)


def expected_rank(diagram: Diagram, v: StripPoint, w: StripPoint) -> int:
    """Number of diagram points u with u <= v and w strictly below T(u)."""
    return sum(1 for u in diagram.strip_points if sampled_leq(u, v) and sampled_strictly_less(w, T(u)))


def _run(fn, items: Sequence, workers: int) -> List:
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def verify_blocks(c: FilteredCospan, d, samples: Sequence[Pair],
                  workers: Optional[int] = None, oracle: Optional[Oracle] = None) -> List[str]:
    """
    Compare structure-map ranks of the cospan with the block counts of a diagram.

    Args:
        c: The cospan
        d: A Decomposition, or a Diagram standing in for one
        samples: Pairs v <= w
        workers: Thread count (defaults to Config.VERIFY_WORKERS)
        oracle: Shared evaluator, to reuse cached point complexes

    Returns:
        One record per mismatching pair
    """
    diagram = d if isinstance(d, Diagram) else diagram_of(d)
    oracle = oracle or Oracle(c)
    workers = Config.VERIFY_WORKERS if workers is None else workers

    def check(pair: Pair) -> Optional[str]:
        v, w = pair
        got = oracle.structure_rank(v, w)
        want = expected_rank(diagram, v, w)
        if got != want:
            return f"rank mismatch v={v} w={w} got={got} expected={want}"
        return None

    problems = [p for p in _run(check, list(samples), workers) if p]
    logger.info("checked %d pairs, %d mismatches", len(samples), len(problems))
    return problems


def _signed(m: SparseMatrix, sign) -> SparseMatrix:
    return m.scale(sign)


def verify_exactness(c: FilteredCospan, rect: Tuple[StripPoint, StripPoint],
                     oracle: Optional[Oracle] = None) -> List[str]:
    """
    Exactness of H_0 along the triangle of a rectangle.

    For (s, t) <= (u, v) <= T(s, t) checks the sequence

        F(s,t) -> F(u,t) + F(s,v) -> F(u,v) -> F(T(s,t))

    at its two middle terms. The first map carries the sign (-1)^k of the
    copy containing (s, t).

    Raises:
        OrderError: If the rectangle is not ordered as above
    """
    st, uv = rect
    top = T(st)
    if not (sampled_leq(st, uv) and sampled_leq(uv, top)):
        raise OrderError(f"rectangle {st} -> {uv} is not below {top}")
    oracle = oracle or Oracle(c)
    f = c.field
    lam = c.lam
    ut = StripPoint(uv.x, st.y, lam)
    sv = StripPoint(st.x, uv.y, lam)
    sign = f.one if st.cell.k % 2 == 0 else f.neg(f.one)

    first = _signed(oracle.induced_map(st, ut), sign).vstack(_signed(oracle.induced_map(st, sv), sign))
    second = (-oracle.induced_map(ut, uv)).hstack(oracle.induced_map(sv, uv))
    third = oracle.induced_map(uv, top)

    problems = []
    if not (second @ first).is_zero():
        problems.append(f"second map after first is nonzero at {st} -> {uv}")
    if not (third @ second).is_zero():
        problems.append(f"third map after second is nonzero at {st} -> {uv}")
    middle = oracle.h0_dim(ut) + oracle.h0_dim(sv)
    r1, r2, r3 = rank(first), rank(second), rank(third)
    if r1 + r2 != middle:
        problems.append(f"not exact at F(u,t)+F(s,v) for {st} -> {uv}: {r1} + {r2} != {middle}")
    if r2 + r3 != oracle.h0_dim(uv):
        problems.append(f"not exact at F(u,v) for {st} -> {uv}: {r2} + {r3} != {oracle.h0_dim(uv)}")
    return problems


def verify_boundary(c: FilteredCospan, points: Sequence[StripPoint],
                    oracle: Optional[Oracle] = None) -> List[str]:
    """Points of the boundary where H_0 does not vanish."""
    oracle = oracle or Oracle(c)
    problems = []
    for p in points:
        if not p.on_boundary():
            raise OrderError(f"{p} is not on the boundary")
        dim = oracle.h0_dim(p)
        if dim:
            problems.append(f"boundary point {p} has H_0 of dimension {dim}")
    return problems


def verify_functoriality(c: FilteredCospan, v: StripPoint, w: StripPoint, x: StripPoint,
                         oracle: Optional[Oracle] = None) -> List[str]:
    """The map v -> x equals the composite through w on H_0."""
    oracle = oracle or Oracle(c)
    direct = oracle.induced_map(v, x)
    composite = oracle.induced_map(w, x) @ oracle.induced_map(v, w)
    if direct != composite:
        return [f"map {v} -> {x} ({structure_case(v, x)}) differs from the composite through {w}"]
    return []


@dataclass
class VerifyReport:
    pairs: int = 0
    rectangles: int = 0
    boundary: int = 0
    problems: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems

    def __str__(self) -> str:
        status = "pass" if self.passed else "fail"
        lines = [f"verify {status} pairs={self.pairs} rectangles={self.rectangles} "
                 f"boundary={self.boundary} problems={len(self.problems)}"]
        return "\n".join(lines + self.problems)


def verify_decomposition(c: FilteredCospan, d, seed: Optional[int] = None,
                         n_pairs: Optional[int] = None, n_rectangles: Optional[int] = None,
                         n_boundary: Optional[int] = None,
                         workers: Optional[int] = None) -> VerifyReport:
    """
    Run the block, exactness and boundary checks on sampled grid points.

    Sample sizes and the seed default to the VERIFY_* settings in Config.
    """
    rng = np.random.default_rng(Config.VERIFY_SEED if seed is None else seed)
    n_pairs = Config.VERIFY_PAIRS if n_pairs is None else n_pairs
    n_rectangles = Config.VERIFY_RECTANGLES if n_rectangles is None else n_rectangles
    n_boundary = Config.VERIFY_BOUNDARY_SAMPLES if n_boundary is None else n_boundary

    oracle = Oracle(c)
    grid = sample_grid(c)
    report = VerifyReport()

    pairs = sample_pairs(grid, n_pairs, rng)
    report.pairs = len(pairs)
    report.problems += verify_blocks(c, d, pairs, workers, oracle)

    rects = sample_rectangles(grid, n_rectangles, rng)
    report.rectangles = len(rects)
    for rect in rects:
        report.problems += verify_exactness(c, rect, oracle)

    edge = boundary_points(c)
    if len(edge) > n_boundary:
        edge = [edge[i] for i in sorted(rng.choice(len(edge), n_boundary, replace=False))]
    report.boundary = len(edge)
    report.problems += verify_boundary(c, edge, oracle)

    logger.info("verification %s with %d problems", "passed" if report.passed else "failed",
                len(report.problems))
    return report
