"""
Morphisms between filtered cospans and their differential.

A degree-m morphism C -> X is a quintuple (alpha_down, alpha_up, alpha,
K_down, K_up). The alphas send degree j to degree j - m of the matching
piece of X; the K maps send degree j of a leg of C to degree j - m + 1 of
the middle complex of X. Matrices are stored per source degree.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ..algebra import SparseMatrix, solve_in_span
from ..complex import ChainMap
from ..errors import DimensionError
from ..strip.homeomorphism import Homeomorphism
from .model import FilteredCospan, direct_sum, flow_shift, zero_cospan
from .summands import Summand, standard_summand

logger = logging.getLogger(__name__)

COMPONENTS = ("alpha_down", "alpha_up", "alpha", "K_down", "K_up")

# component -> (source piece, target piece, extra degree offset)
_PIECES = {
    "alpha_down": ("down", "down", 0),
    "alpha_up": ("up", "up", 0),
    "alpha": ("mid", "mid", 0),
    "K_down": ("down", "mid", 1),
    "K_up": ("up", "mid", 1),
}


@dataclass
class CospanMorphism:
    """A homogeneous morphism of degree `degree` from `source` to `target`."""

    source: FilteredCospan
    target: FilteredCospan
    degree: int = 0
    alpha_down: ChainMap = field(default_factory=dict)
    alpha_up: ChainMap = field(default_factory=dict)
    alpha: ChainMap = field(default_factory=dict)
    K_down: ChainMap = field(default_factory=dict)
    K_up: ChainMap = field(default_factory=dict)

    def __post_init__(self):
        self.source.field.check_same(self.target.field)
        for name in COMPONENTS:
            maps = getattr(self, name)
            src_piece = getattr(self.source, _PIECES[name][0])
            for j, m in list(maps.items()):
                if j not in src_piece.degrees:
                    if m.cols or not m.is_zero():
                        raise DimensionError(f"{name} given in degree {j} where the source is empty")
                    del maps[j]
                    continue
                if m.shape != self.shape(name, j):
                    raise DimensionError(f"{name} in degree {j} has shape {m.shape}, "
                                         f"expected {self.shape(name, j)}")

    @property
    def field(self):
        return self.source.field

    def shape(self, name: str, j: int) -> Tuple[int, int]:
        src, dst, offset = _PIECES[name]
        return (getattr(self.target, dst).dim(j - self.degree + offset),
                getattr(self.source, src).dim(j))

    def at(self, name: str, j: int) -> SparseMatrix:
        """Component `name` on source degree j, zero when not stored."""
        m = getattr(self, name).get(j)
        if m is None:
            rows, cols = self.shape(name, j)
            return SparseMatrix.zero(rows, cols, self.field)
        return m

    def source_degrees(self, name: str) -> List[int]:
        return getattr(self.source, _PIECES[name][0]).degrees

    def blocks(self) -> Iterator[Tuple[str, int, SparseMatrix]]:
        for name in COMPONENTS:
            for j in self.source_degrees(name):
                yield name, j, self.at(name, j)

    def rebind(self, source: FilteredCospan, target: FilteredCospan) -> "CospanMorphism":
        """Same matrices between cospans with the same shapes (e.g. flowed copies)."""
        return CospanMorphism(source, target, self.degree,
                              *(dict(getattr(self, n)) for n in COMPONENTS))

    def _combine(self, other: "CospanMorphism", a) -> "CospanMorphism":
        if other.degree != self.degree:
            raise DimensionError(f"cannot add morphisms of degrees {self.degree} and {other.degree}")
        parts = {}
        for name in COMPONENTS:
            parts[name] = {j: self.at(name, j).axpy(a, other.at(name, j))
                           for j in self.source_degrees(name)}
        return CospanMorphism(self.source, self.target, self.degree, **parts)

    def __add__(self, other: "CospanMorphism") -> "CospanMorphism":
        return self._combine(other, self.field.one)

    def __sub__(self, other: "CospanMorphism") -> "CospanMorphism":
        return self._combine(other, self.field.neg(self.field.one))

    def scale(self, a) -> "CospanMorphism":
        parts = {name: {j: self.at(name, j).scale(a) for j in self.source_degrees(name)}
                 for name in COMPONENTS}
        return CospanMorphism(self.source, self.target, self.degree, **parts)

    def is_zero(self) -> bool:
        return all(m.is_zero() for _, _, m in self.blocks())

    def nonzero_components(self) -> List[str]:
        return sorted({name for name, _, m in self.blocks() if not m.is_zero()})

    def filtration_violations(self) -> List[str]:
        """Entries of alpha_up raising the ascending level, or of alpha_down lowering the descending one."""
        problems = []
        checks = (("alpha_up", "up", lambda dst, src: dst <= src),
                  ("alpha_down", "down", lambda dst, src: dst >= src))
        for name, piece, ok in checks:
            src_c, dst_c = getattr(self.source, piece), getattr(self.target, piece)
            for j in self.source_degrees(name):
                for r, c, _ in self.at(name, j).entries():
                    lv_dst = dst_c.levels[j - self.degree][r]
                    lv_src = src_c.levels[j][c]
                    if not ok(lv_dst, lv_src):
                        problems.append(f"{name} sends {src_c.generators[j][c]} (degree {j}) "
                                        f"to {dst_c.generators[j - self.degree][r]} against the filtration")
        return problems

    def __eq__(self, other) -> bool:
        if not isinstance(other, CospanMorphism):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return all(m == other.at(name, j) for name, j, m in self.blocks())

    __hash__ = None


def identity_morphism(c: FilteredCospan, target: Optional[FilteredCospan] = None) -> CospanMorphism:
    """(1, 1, 1, 0, 0), optionally into a cospan of the same shape (a flowed copy)."""
    target = c if target is None else target
    one = lambda piece, j: SparseMatrix.identity(getattr(c, piece).dim(j), c.field)  # noqa: E731
    return CospanMorphism(
        c, target, 0,
        alpha_down={j: one("down", j) for j in c.down.degrees},
        alpha_up={j: one("up", j) for j in c.up.degrees},
        alpha={j: one("mid", j) for j in c.mid.degrees},
    )


def zero_morphism(source: FilteredCospan, target: FilteredCospan, degree: int = 0) -> CospanMorphism:
    return CospanMorphism(source, target, degree)


def compose(b: CospanMorphism, a: CospanMorphism) -> CospanMorphism:
    """
    b o a = (b_down a_down, b_up a_up, b a, L_down a_down + b K_down, L_up a_up + b K_up).

    Args:
        b: Morphism X -> Z
        a: Morphism C -> X

    Returns:
        The composite C -> Z of degree a.degree + b.degree
    """
    if a.target.field != b.source.field:
        raise DimensionError("morphisms do not compose: field mismatch")
    m = a.degree
    parts: Dict[str, ChainMap] = {name: {} for name in COMPONENTS}
    for j in a.source_degrees("alpha_down"):
        parts["alpha_down"][j] = b.at("alpha_down", j - m) @ a.at("alpha_down", j)
        parts["K_down"][j] = (b.at("K_down", j - m) @ a.at("alpha_down", j)
                              + b.at("alpha", j - m + 1) @ a.at("K_down", j))
    for j in a.source_degrees("alpha_up"):
        parts["alpha_up"][j] = b.at("alpha_up", j - m) @ a.at("alpha_up", j)
        parts["K_up"][j] = (b.at("K_up", j - m) @ a.at("alpha_up", j)
                            + b.at("alpha", j - m + 1) @ a.at("K_up", j))
    for j in a.source_degrees("alpha"):
        parts["alpha"][j] = b.at("alpha", j - m) @ a.at("alpha", j)
    return CospanMorphism(a.source, b.target, a.degree + b.degree, **parts)


def differential(f: CospanMorphism) -> CospanMorphism:
    """
    The differential of a degree-m morphism C -> X, of degree m + 1:

        (-d alpha_down + (-1)^m alpha_down d,
         -d alpha_up + (-1)^m alpha_up d,
         d alpha - (-1)^m alpha d,
         phi_down alpha_down - (-1)^m alpha psi_down + d K_down + (-1)^m K_down d,
         phi_up alpha_up - (-1)^m alpha psi_up + d K_up + (-1)^m K_up d)
    """
    src, dst, m = f.source, f.target, f.degree
    sign = f.field.one if m % 2 == 0 else f.field.neg(f.field.one)
    parts: Dict[str, ChainMap] = {name: {} for name in COMPONENTS}
    for leg, a_name, k_name in (("down", "alpha_down", "K_down"), ("up", "alpha_up", "K_up")):
        s_leg, d_leg = getattr(src, leg), getattr(dst, leg)
        psi = src.psi_down_at if leg == "down" else src.psi_up_at
        phi = dst.psi_down_at if leg == "down" else dst.psi_up_at
        for j in s_leg.degrees:
            a_j = f.at(a_name, j)
            parts[a_name][j] = (-(d_leg.boundary(j - m) @ a_j)
                                + (f.at(a_name, j - 1) @ s_leg.boundary(j)).scale(sign))
            parts[k_name][j] = (phi(j - m) @ a_j
                                - (f.at("alpha", j) @ psi(j)).scale(sign)
                                + dst.mid.boundary(j - m + 1) @ f.at(k_name, j)
                                + (f.at(k_name, j - 1) @ s_leg.boundary(j)).scale(sign))
    for j in src.mid.degrees:
        parts["alpha"][j] = (dst.mid.boundary(j - m) @ f.at("alpha", j)
                             - (f.at("alpha", j - 1) @ src.mid.boundary(j)).scale(sign))
    return CospanMorphism(src, dst, m + 1, **parts)


def _unknowns(source: FilteredCospan, target: FilteredCospan, degree: int, filtered: bool):
    """Coordinates (component, degree, row, col) of a free degree-`degree` morphism."""
    blank = CospanMorphism(source, target, degree)
    out = []
    for name in COMPONENTS:
        piece = _PIECES[name][0]
        for j in blank.source_degrees(name):
            rows, cols = blank.shape(name, j)
            for c in range(cols):
                for r in range(rows):
                    if filtered and name in ("alpha_up", "alpha_down"):
                        lv_dst = getattr(target, piece).levels[j - degree][r]
                        lv_src = getattr(source, piece).levels[j][c]
                        if name == "alpha_up" and not lv_dst <= lv_src:
                            continue
                        if name == "alpha_down" and not lv_dst >= lv_src:
                            continue
                    out.append((name, j, r, c))
    return out


def _flatten(f: CospanMorphism, index: Dict[Tuple[str, int, int, int], int]) -> Dict[int, object]:
    vec = {}
    for name, j, m in f.blocks():
        for r, c, v in m.entries():
            vec[index[(name, j, r, c)]] = v
    return vec


def coboundary_witness(diff: CospanMorphism, filtered: bool = True) -> Optional[CospanMorphism]:
    """
    Find h of degree diff.degree - 1 with differential(h) = diff.

    Args:
        diff: A morphism between diff.source and diff.target
        filtered: Restrict h to entries that respect the filtrations

    Returns:
        The witness h, or None when diff is not a coboundary
    """
    src, dst, m = diff.source, diff.target, diff.degree - 1
    free = _unknowns(src, dst, m, filtered)
    image_coords = _unknowns(src, dst, m + 1, False)
    index = {key: i for i, key in enumerate(image_coords)}
    columns = []
    for name, j, r, c in free:
        rows, cols = CospanMorphism(src, dst, m).shape(name, j)
        unit = CospanMorphism(src, dst, m, **{name: {j: SparseMatrix(rows, cols, src.field,
                                                                        [{r: src.field.one} if cc == c else {}
                                                                         for cc in range(cols)])}})
        columns.append(_flatten(differential(unit), index))
    system = SparseMatrix.from_columns(len(image_coords), src.field, columns)
    x = solve_in_span(system, _flatten(diff, index))
    if x is None:
        return None
    parts: Dict[str, ChainMap] = {name: {} for name in COMPONENTS}
    blank = CospanMorphism(src, dst, m)
    for (name, j, r, c), v in zip(free, x):
        if src.field.is_zero(v):
            continue
        if j not in parts[name]:
            parts[name][j] = [{} for _ in range(blank.shape(name, j)[1])]
        parts[name][j][c][r] = v
    built = {name: {j: SparseMatrix(*blank.shape(name, j), src.field, cols) for j, cols in maps.items()}
             for name, maps in parts.items()}
    return CospanMorphism(src, dst, m, **built)


def interleaving_violations(c: FilteredCospan, x: FilteredCospan, eps, phi: Homeomorphism,
                            fwd: CospanMorphism, bwd: CospanMorphism) -> List[str]:
    """
    Check that fwd: C -> T_eps X and bwd: X -> T_eps C form an eps-interleaving.

    Both must be closed and filtration-preserving into the flowed targets,
    and each round trip must differ from the shift inclusion by a coboundary.
    """
    if fwd.degree != 0 or bwd.degree != 0:
        return ["interleaving maps must have degree 0"]
    tx, tc = flow_shift(x, eps, phi), flow_shift(c, eps, phi)
    t2x, t2c = flow_shift(x, 2 * eps, phi), flow_shift(c, 2 * eps, phi)
    f = fwd.rebind(c, tx)
    g = bwd.rebind(x, tc)
    problems = []
    for label, h in (("forward", f), ("backward", g)):
        if not differential(h).is_zero():
            problems.append(f"{label} map is not closed under the differential")
        problems += [f"{label}: {p}" for p in h.filtration_violations()]
    if problems:
        return problems
    for label, start, there, back, end in (("C", c, f, g.rebind(tx, t2c), t2c),
                                           ("X", x, g, f.rebind(tc, t2x), t2x)):
        round_trip = compose(back, there)
        gap = round_trip - identity_morphism(start, end)
        if coboundary_witness(gap) is None:
            problems.append(f"round trip on {label} is not homotopic to the shift map")
    logger.debug("interleaving check at eps=%s: %d problems", eps, len(problems))
    return problems


def verify_interleaving(c: FilteredCospan, x: FilteredCospan, eps, phi: Homeomorphism,
                        fwd: CospanMorphism, bwd: CospanMorphism) -> bool:
    return not interleaving_violations(c, x, eps, phi, fwd, bwd)


def shape_identity(c: FilteredCospan, x: FilteredCospan) -> CospanMorphism:
    """The identity matrices between two cospans with identical shapes and maps."""
    parts = {}
    for name, piece in (("alpha_down", "down"), ("alpha_up", "up"), ("alpha", "mid")):
        a, b = getattr(c, piece), getattr(x, piece)
        if [a.dim(j) for j in a.degrees] != [b.dim(j) for j in b.degrees] or a.degrees != b.degrees:
            raise DimensionError(f"{piece} pieces differ in shape")
        parts[name] = {j: SparseMatrix.identity(a.dim(j), c.field) for j in a.degrees}
    return CospanMorphism(c, x, 0, **parts)


def direct_sum_morphism(parts: List[CospanMorphism]) -> CospanMorphism:
    """Block-diagonal morphism between the direct sums of sources and targets."""
    if not parts:
        raise ValueError("need at least one morphism")
    degree = parts[0].degree
    if any(p.degree != degree for p in parts):
        raise DimensionError("direct sum of morphisms of different degrees")
    source = direct_sum([p.source for p in parts])
    target = direct_sum([p.target for p in parts])
    field_ = source.field
    maps: Dict[str, ChainMap] = {}
    for name in COMPONENTS:
        src_piece, dst_piece, offset = _PIECES[name]
        maps[name] = {}
        for j in getattr(source, src_piece).degrees:
            rows = [getattr(p.target, dst_piece).dim(j - degree + offset) for p in parts]
            cols = [getattr(p.source, src_piece).dim(j) for p in parts]
            blocks = [[p.at(name, j) if i == q else None for q in range(len(parts))]
                      for i, p in enumerate(parts)]
            maps[name][j] = SparseMatrix.block(blocks, rows, cols, field_)
    return CospanMorphism(source, target, degree, **maps)


def summand_interleaving(s: Summand, t: Summand, field_=None, lam=None):
    """
    Interleaving witness between two summands of the same kind and degree:
    identity matrices both ways.

    Returns:
        (C, X, fwd, bwd)
    """
    if (s.kind, s.degree) != (t.kind, t.degree):
        raise DimensionError("summands of different kind or degree have no identity witness")
    c, x = standard_summand(s, field_, lam), standard_summand(t, field_, lam)
    return c, x, shape_identity(c, x), shape_identity(x, c)


def boundary_interleaving(s: Summand, field_=None, lam=None):
    """
    Interleaving witness between a summand and the zero cospan: zero maps.

    Returns:
        (C, 0, fwd, bwd)
    """
    c = standard_summand(s, field_, lam)
    z = zero_cospan(c.field, c.lam)
    return c, z, zero_morphism(c, z), zero_morphism(z, c)
