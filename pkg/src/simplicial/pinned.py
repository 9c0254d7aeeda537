"""
Pinned simplicial cospans.

A finite simplicial complex X with vertex values in [-lam, lam] gives

    C_up   = C(X-) / C(dX-)     levels: largest vertex value
    C_down = C(X+) / C(dX+)     levels: smallest vertex value
    D      = C(X)  / C(dX)

where dX+ and dX- are the simplices with every vertex pinned at +lam or
-lam, X- holds the simplices with no vertex at +lam, and X+ those with no
vertex at -lam. The maps into D are induced by inclusion.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra import Field, SparseMatrix, field_from_name
from ..complex import ChainComplex, FilteredComplex, Flavor, Level, level_value
from ..cospan import FilteredCospan
from ..errors import CospanError, ValidationError
from ..strip import Homeomorphism

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


@dataclass
class SimplicialInput:
    """A finite abstract simplicial complex with one value per vertex."""

    lam: Fraction
    field_name: str = "Q"
    values: Dict[int, Level] = field(default_factory=dict)
    simplices: List[Simplex] = field(default_factory=list)

    def __post_init__(self):
        self.lam = Fraction(self.lam)
        self.simplices = [tuple(sorted(s)) for s in self.simplices]

    @property
    def all_simplices(self) -> List[Simplex]:
        """Listed simplices plus the vertices, deduplicated, ordered by dimension."""
        found = {(v,) for v in self.values} | set(self.simplices)
        return sorted(found, key=lambda s: (len(s), s))

    def missing_faces(self) -> List[Tuple[Simplex, Simplex]]:
        """(simplex, face) pairs where a codimension-one face is not listed."""
        known = set(self.all_simplices)
        missing = []
        for s in self.all_simplices:
            if len(s) < 2:
                continue
            for face in combinations(s, len(s) - 1):
                if face not in known:
                    missing.append((s, face))
        return missing

    def validate(self) -> List[str]:
        problems = []
        seen = set()
        for s in self.simplices:
            if len(set(s)) != len(s):
                problems.append(f"simplex {s} repeats a vertex")
            if s in seen:
                problems.append(f"simplex {s} is listed twice")
            seen.add(s)
            for v in s:
                if v not in self.values:
                    problems.append(f"simplex {s} uses vertex {v} which has no value")
        for s, face in self.missing_faces():
            problems.append(f"face {face} of {s} is missing")
        for v, value in self.values.items():
            if not -self.lam <= value <= self.lam:
                problems.append(f"vertex {v} value {value} lies outside [-{self.lam}, {self.lam}]")
        try:
            field_from_name(self.field_name)
        except CospanError as e:
            problems.append(str(e))
        return problems


def _pinned(s: Simplex, values: Dict[int, Level], target) -> bool:
    return all(values[v] == target for v in s)


def _quotient(simplices: Sequence[Simplex], killed, field: Field):
    """Generators per degree and boundary matrices of C(simplices) / C(killed)."""
    gens: Dict[int, List[Simplex]] = {}
    for s in simplices:
        if s not in killed:
            gens.setdefault(len(s) - 1, []).append(s)
    index = {k: {s: i for i, s in enumerate(ss)} for k, ss in gens.items()}
    one, minus = field.one, field.neg(field.one)
    bds = {}
    for k, ss in gens.items():
        if k == 0:
            continue
        below = index.get(k - 1, {})
        cols = []
        for s in ss:
            col = {}
            for j in range(len(s)):
                face = s[:j] + s[j + 1:]
                r = below.get(face)
                if r is not None:
                    col[r] = one if j % 2 == 0 else minus
            cols.append(col)
        bds[k] = SparseMatrix.from_columns(len(below), field, cols)
    return gens, bds


def _names(gens: Dict[int, List[Simplex]]) -> Dict[int, List[str]]:
    return {k: ["-".join(str(v) for v in s) for s in ss] for k, ss in gens.items()}


def _inclusion(src: Dict[int, List[Simplex]], dst: Dict[int, List[Simplex]], field: Field):
    maps = {}
    for k, ss in src.items():
        where = {s: i for i, s in enumerate(dst.get(k, []))}
        maps[k] = SparseMatrix.from_columns(len(where), field, [{where[s]: field.one} for s in ss])
    return maps


def build_pinned_cospan(s: SimplicialInput) -> FilteredCospan:
    """
    Build the pinned cospan of a valued simplicial complex.

    Args:
        s: The input complex

    Returns:
        A cospan that passes validation

    Raises:
        ValidationError: If the complex is not closed under faces, repeats a
            simplex or has a value outside [-lam, lam]
    """
    problems = s.validate()
    if problems:
        raise ValidationError(problems)
    f = field_from_name(s.field_name)
    lam, values = s.lam, s.values
    simplices = s.all_simplices
    top = {x for x in simplices if _pinned(x, values, lam)}
    bottom = {x for x in simplices if _pinned(x, values, -lam)}
    lower = [x for x in simplices if all(values[v] != lam for v in x)]
    upper = [x for x in simplices if all(values[v] != -lam for v in x)]

    up_gens, up_bds = _quotient(lower, bottom, f)
    down_gens, down_bds = _quotient(upper, top, f)
    mid_gens, mid_bds = _quotient(simplices, top | bottom, f)

    up_levels = {k: [max(values[v] for v in x) for x in ss] for k, ss in up_gens.items()}
    down_levels = {k: [min(values[v] for v in x) for x in ss] for k, ss in down_gens.items()}

    up = FilteredComplex(f, Flavor.ASCENDING, lam, _names(up_gens), up_levels, up_bds)
    down = FilteredComplex(f, Flavor.DESCENDING, lam, _names(down_gens), down_levels, down_bds)
    mid = ChainComplex(f, _names(mid_gens), mid_bds)
    c = FilteredCospan(up, down, mid, _inclusion(up_gens, mid_gens, f), _inclusion(down_gens, mid_gens, f))
    logger.debug("pinned cospan from %d simplices: %d up, %d down, %d mid generators",
                 len(simplices), up.total_dim, down.total_dim, mid.total_dim)
    return c


def relabel(s: SimplicialInput, perm: Dict[int, int]) -> SimplicialInput:
    """Rename vertices by `perm`; simplices are re-sorted."""
    return SimplicialInput(
        s.lam, s.field_name,
        {perm[v]: value for v, value in s.values.items()},
        [tuple(sorted(perm[v] for v in x)) for x in s.simplices],
    )


def perturb(s: SimplicialInput, eps, phi: Homeomorphism,
            rng: Optional[np.random.Generator] = None) -> SimplicialInput:
    """
    Move every unpinned vertex value by at most eps in xi-coordinates.

    Args:
        s: The input complex
        eps: Largest flow applied to any vertex
        phi: Homeomorphism defining xi
        rng: Seeded generator (defaults to seed 0)

    Returns:
        A copy with flowed values; pinned vertices keep their values
    """
    phi.check_lambda(s.lam)
    rng = rng or np.random.default_rng(0)
    eps = Fraction(eps)
    values = {}
    for v in sorted(s.values):
        value = s.values[v]
        if abs(level_value(value)) >= s.lam:
            values[v] = value
            continue
        shift = eps * Fraction(int(rng.integers(-1000, 1001)), 1000)
        values[v] = phi.rho(shift, value)
    return SimplicialInput(s.lam, s.field_name, values, list(s.simplices))
