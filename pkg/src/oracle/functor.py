"""
Brute-force evaluation of the strip functor on a cospan.

At a point T^k(x, y) of the fundamental domain the value is one of three
shifted mapping cones, each a subcomplex of a full complex:

    S piece:  Cone(-psi_down + psi_up : C_down(>= x) + C_up(<= y) -> D)[-k+1]
    L piece:  Cone(C_up(<= -2 lam - x) -> C_up(<= y))[-k]
    A piece:  Cone(C_down(>= 2 lam - y) -> C_down(>= x))[-k]

Generators of the full complexes are keyed (block, degree in the cospan,
index). S complexes have blocks down, up and mid; L and A complexes have
blocks lo (the cone's source) and hi (its target). Only homological
degrees -1, 0 and 1 are built, which is enough for H_0.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ..algebra import SparseMatrix, rank
from ..complex import ChainComplex
from ..cospan import FilteredCospan
from ..errors import ChainComplexError, OrderError
from ..strip import StripPoint, base_point, sampled_leq, tolerance

logger = logging.getLogger(__name__)

Key = Tuple[str, int, int]
KeyMap = Callable[[Key], List[Tuple[Key, object]]]

DEGREES = (-1, 0, 1)


@dataclass
class PointComplex:
    """The complex at one point, with its generators keyed into the full complex."""

    point: StripPoint
    piece: str
    k: int
    gens: Dict[int, List[Key]]
    complex: ChainComplex

    def index(self, n: int) -> Dict[Key, int]:
        return {key: i for i, key in enumerate(self.gens.get(n, []))}

    @property
    def h0_dim(self) -> int:
        return self.complex.homology_dim(0)


def _sign(field, exponent: int):
    return field.one if exponent % 2 == 0 else field.neg(field.one)


def _at_least(bound):
    if isinstance(bound, float):
        tol = tolerance(bound)
        return lambda lv: float(lv) >= bound - tol
    return lambda lv: lv >= bound


def _at_most(bound):
    if isinstance(bound, float):
        tol = tolerance(bound)
        return lambda lv: float(lv) <= bound + tol
    return lambda lv: lv <= bound


def _blocks(c: FilteredCospan, piece: str, k: int, x, y):
    """(block, complex, membership test, offset) with cospan degree = n + offset."""
    lam = c.lam
    if piece == "S":
        return [("down", c.down, _at_least(x), -k),
                ("up", c.up, _at_most(y), -k),
                ("mid", c.mid, None, -k + 1)]
    if piece == "L":
        return [("lo", c.up, _at_most(-2 * lam - x), -k - 1),
                ("hi", c.up, _at_most(y), -k)]
    return [("lo", c.down, _at_least(2 * lam - y), -k - 1),
            ("hi", c.down, _at_least(x), -k)]


def _column_entries(m: SparseMatrix, i: int):
    return m.column(i).items()


def _full_boundary(c: FilteredCospan, piece: str) -> KeyMap:
    """Boundary of the unshifted cone on generator keys."""
    f = c.field
    legs = {"down": c.down, "up": c.up, "mid": c.mid}
    cone_of = c.up if piece == "L" else c.down

    def image(key: Key):
        block, j, i = key
        out = []
        if piece == "S":
            if block == "mid":
                return [(("mid", j - 1, r), v) for r, v in _column_entries(c.mid.boundary(j), i)]
            cx = legs[block]
            out += [((block, j - 1, r), f.neg(v)) for r, v in _column_entries(cx.boundary(j), i)]
            if block == "down":
                out += [(("mid", j, r), f.neg(v)) for r, v in _column_entries(c.psi_down_at(j), i)]
            else:
                out += [(("mid", j, r), v) for r, v in _column_entries(c.psi_up_at(j), i)]
            return out
        if block == "hi":
            return [(("hi", j - 1, r), v) for r, v in _column_entries(cone_of.boundary(j), i)]
        out += [(("lo", j - 1, r), f.neg(v)) for r, v in _column_entries(cone_of.boundary(j), i)]
        out.append((("hi", j, i), f.one))
        return out

    return image


def restrict(fn: KeyMap, src: PointComplex, dst: PointComplex, n_src: int, n_dst: int,
             scale=None) -> SparseMatrix:
    """
    Matrix of a map given on full-complex keys, restricted to two point complexes.

    Raises:
        ChainComplexError: If an image leaves the target subcomplex
    """
    f = src.complex.field
    target = dst.index(n_dst)
    cols = []
    for key in src.gens.get(n_src, []):
        col = {}
        for tkey, v in fn(key):
            if f.is_zero(v):
                continue
            r = target.get(tkey)
            if r is None:
                raise ChainComplexError(f"map sends {key} outside the complex at {dst.point}")
            if scale is not None:
                v = f.mul(scale, v)
            col[r] = f.add(col.get(r, f.zero), v)
            if f.is_zero(col[r]):
                del col[r]
        cols.append(col)
    return SparseMatrix.from_columns(len(dst.gens.get(n_dst, [])), f, cols)


def _build(c: FilteredCospan, p: StripPoint) -> PointComplex:
    cell = p.cell
    piece, k = cell.chart, cell.k
    x, y = base_point(p)
    gens: Dict[int, List[Key]] = {}
    for n in (-2,) + DEGREES:
        keys = []
        for block, cx, member, offset in _blocks(c, piece, k, x, y):
            j = n + offset
            for i in range(cx.dim(j)):
                if member is None or member(cx.levels[j][i]):
                    keys.append((block, j, i))
        gens[n] = keys
    shell = PointComplex(p, piece, k, gens, ChainComplex(c.field))
    sigma = _sign(c.field, k - 1 if piece == "S" else k)
    full = _full_boundary(c, piece)
    bds = {n: restrict(full, shell, shell, n, n - 1, sigma) for n in DEGREES}
    names = {n: [f"{b}{j}:{i}" for b, j, i in keys] for n, keys in gens.items()}
    shell.complex = ChainComplex(c.field, names, bds)
    logger.debug("point %s in %s: %d generators in degree 0", p, cell, len(gens[0]))
    return shell


def structure_case(v: StripPoint, w: StripPoint) -> str:
    """Which of the cases a-i defines the structure map from v to w."""
    cv, cw = v.cell, w.cell
    a, b = cv.chart, cw.chart
    if cw.k == cv.k:
        if a == b:
            return "a"
        if a == "S" and b == "L":
            return "b"
        if a == "S" and b == "A":
            return "c"
    elif cw.k == cv.k + 1:
        return {("L", "S"): "d", ("A", "S"): "e", ("L", "L"): "f",
                ("A", "A"): "g", ("S", "S"): "h"}.get((a, b), "i")
    return "i"


def _case_map(c: FilteredCospan, case: str, variant: int = 0) -> Optional[KeyMap]:
    f = c.field
    one, minus = f.one, f.neg(f.one)

    def psi_into_mid(psi_at):
        return lambda j, i: [(("mid", j, r), v) for r, v in _column_entries(psi_at(j), i)]

    up_mid, down_mid = psi_into_mid(c.psi_up_at), psi_into_mid(c.psi_down_at)

    def by_block(rules):
        def image(key: Key):
            block, j, i = key
            rule = rules.get(block)
            return rule(j, i) if rule else []
        return image

    if case == "a":
        return lambda key: [(key, one)]
    if case == "b":
        return by_block({"up": lambda j, i: [(("hi", j, i), one)]})
    if case == "c":
        return by_block({"down": lambda j, i: [(("hi", j, i), one)]})
    if case == "d":
        return by_block({"lo": lambda j, i: [(("up", j, i), one)], "hi": up_mid})
    if case == "e":
        return by_block({"lo": lambda j, i: [(("down", j, i), minus)], "hi": down_mid})
    if case == "f":
        return by_block({"lo": lambda j, i: [(("hi", j, i), one)]})
    if case == "g":
        return by_block({"lo": lambda j, i: [(("hi", j, i), minus)]})
    if case == "h":
        return by_block({"up": up_mid} if variant == 0 else {"down": down_mid})
    return None


class Oracle:
    """Point complexes and structure maps of one cospan, cached per point."""

    def __init__(self, c: FilteredCospan):
        self.cospan = c
        self._cache: Dict[tuple, PointComplex] = {}
        self._lock = threading.Lock()

    def point_complex(self, p: StripPoint) -> PointComplex:
        if p.lam != self.cospan.lam:
            raise OrderError(f"point {p} has bound {p.lam}, cospan has {self.cospan.lam}")
        key = (p.x, p.y, p.cell)
        with self._lock:
            found = self._cache.get(key)
        if found is None:
            found = _build(self.cospan, p)
            with self._lock:
                self._cache[key] = found
        return found

    def h0_dim(self, p: StripPoint) -> int:
        return self.point_complex(p).h0_dim

    def structure_map(self, v: StripPoint, w: StripPoint, variant: int = 0) -> Dict[int, SparseMatrix]:
        """
        Chain-level structure map from v to w in degrees -1, 0 and 1.

        Args:
            v: Source point
            w: Target point with v <= w
            variant: For case h, 0 uses psi_up and 1 uses psi_down

        Raises:
            OrderError: If v is not below w
        """
        if not sampled_leq(v, w):
            raise OrderError(f"{v} is not below {w}")
        src, dst = self.point_complex(v), self.point_complex(w)
        fn = _case_map(self.cospan, structure_case(v, w), variant)
        out = {}
        for n in DEGREES:
            if fn is None:
                out[n] = SparseMatrix.zero(len(dst.gens[n]), len(src.gens[n]), self.cospan.field)
            else:
                out[n] = restrict(fn, src, dst, n, n)
        return out

    def induced_map(self, v: StripPoint, w: StripPoint, variant: int = 0) -> SparseMatrix:
        """The map H_0(v) -> H_0(w) in the homology bases of the two point complexes."""
        phi = self.structure_map(v, w, variant)[0]
        src, dst = self.point_complex(v), self.point_complex(w)
        h_src, h_dst = src.complex.homology(0), dst.complex.homology(0)
        cols = []
        for z in h_src.representatives:
            coords = h_dst.coordinates(phi.apply(z))
            cols.append({i: a for i, a in enumerate(coords) if not self.cospan.field.is_zero(a)})
        return SparseMatrix.from_columns(h_dst.dim, self.cospan.field, cols)

    def structure_rank(self, v: StripPoint, w: StripPoint) -> int:
        if not sampled_leq(v, w):
            raise OrderError(f"{v} is not below {w}")
        if structure_case(v, w) == "i":
            return 0
        return rank(self.induced_map(v, w))

    def homotopic_case_h(self, v: StripPoint, w: StripPoint) -> bool:
        """
        Check in degree 0 that the two case h representatives differ by
        dH + Hd, where H is (-1)^k times the identity on the mid block.
        """
        if structure_case(v, w) != "h":
            raise OrderError(f"{v} -> {w} is not a case h pair")
        src, dst = self.point_complex(v), self.point_complex(w)
        f = self.cospan.field
        k = src.k
        h_sign = _sign(f, k)

        def homotopy(key: Key):
            return [(key, h_sign)] if key[0] == "mid" else []

        h0 = restrict(homotopy, src, dst, 0, 1)
        h_minus = restrict(homotopy, src, dst, -1, 0)
        lhs = self.structure_map(v, w, 1)[0] - self.structure_map(v, w, 0)[0]
        rhs = dst.complex.boundary(1) @ h0 + h_minus @ src.complex.boundary(0)
        return lhs == rhs


def eval_F0(c: FilteredCospan, p: StripPoint) -> PointComplex:
    return Oracle(c).point_complex(p)


def h0_dim(c: FilteredCospan, p: StripPoint) -> int:
    return Oracle(c).h0_dim(p)


def structure_rank(c: FilteredCospan, v: StripPoint, w: StripPoint) -> int:
    return Oracle(c).structure_rank(v, w)


def induced_map(c: FilteredCospan, v: StripPoint, w: StripPoint) -> SparseMatrix:
    return Oracle(c).induced_map(v, w)


def homotopic_case_h(c: FilteredCospan, v: StripPoint, w: StripPoint) -> bool:
    return Oracle(c).homotopic_case_h(v, w)


def structure_map(c: FilteredCospan, v: StripPoint, w: StripPoint, variant: int = 0) -> Dict[int, SparseMatrix]:
    return Oracle(c).structure_map(v, w, variant)
