"""
Decomposition of a filtered cospan into standard elementary summands.

Per degree k the two legs are first split by persistence reduction into
bases A + B + H. The homology classes H of each leg are then rearranged
by ordered reductions so that their images in H_k(D) fall into the
matched, free and vanishing families, and every step is a triangular
recombination in filtration order, which keeps the bases orthogonal.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..algebra import SparseMatrix, Vector, column_reduce, kernel_basis, solve_in_span, vec_axpy, vec_from_dense
from ..complex import DegreeBases, FilteredComplex, Level, decompose_filtered, is_orthogonal_basis
from ..config import Config
from ..cospan import FilteredCospan, Summand, SummandKind
from ..errors import OrthogonalityError, ValidationError
from .induced import homology_induced_map, match_filtered_iso

logger = logging.getLogger(__name__)


@dataclass
class LegClasses:
    """Homology classes of one leg in one degree, split into the three families."""

    matched: List[Vector] = field(default_factory=list)
    matched_levels: List[Level] = field(default_factory=list)
    free: List[Vector] = field(default_factory=list)
    free_levels: List[Level] = field(default_factory=list)
    vanishing: List[Vector] = field(default_factory=list)
    vanishing_levels: List[Level] = field(default_factory=list)

    @property
    def all(self) -> List[Vector]:
        return self.matched + self.free + self.vanishing


@dataclass
class DegreeWitness:
    """Bases of both legs in one degree together with the class families."""

    degree: int
    up: DegreeBases
    down: DegreeBases
    up_classes: LegClasses
    down_classes: LegClasses
    mid_homology_dim: int = 0

    def basis(self, leg: str) -> List[Vector]:
        b = getattr(self, leg)
        return b.A + b.B + getattr(self, f"{leg}_classes").all


@dataclass
class Decomposition:
    """Summands of a cospan and the bases that certify them."""

    cospan: FilteredCospan
    summands: List[Summand]
    witness: Dict[int, DegreeWitness]

    def counts(self) -> Counter:
        return Counter(self.summands)

    def of_kind(self, kind: SummandKind) -> List[Summand]:
        return [s for s in self.summands if s.kind is kind]

    def __str__(self) -> str:
        return "\n".join(str(s) for s in self.summands)


def _combine(c: FilteredComplex, vectors: Sequence[Vector], coeffs: Vector, offset: int = 0) -> Vector:
    """sum_i coeffs[i] * vectors[i - offset] over indices at or past offset."""
    out: Vector = {}
    for i, a in coeffs.items():
        if i >= offset:
            out = vec_axpy(c.field, out, a, vectors[i - offset])
    return out


def _split_kernel(c: FilteredComplex, classes: List[Vector], levels: List[Level], images: SparseMatrix):
    """
    Reduce the images in filtration order. Zero columns give classes with
    vanishing image; the others keep independent images.
    """
    red = column_reduce(images)
    kept, kept_levels, kept_images = [], [], []
    vanishing, vanishing_levels = [], []
    zero = set(red.zero_columns())
    for j in range(len(classes)):
        v = _combine(c, classes, red.change_of_basis.column(j))
        if j in zero:
            vanishing.append(v)
            vanishing_levels.append(levels[j])
        else:
            kept.append(v)
            kept_levels.append(levels[j])
            kept_images.append(red.reduced.column(j))
    return kept, kept_levels, kept_images, vanishing, vanishing_levels


def _intersection(n: int, field, u: List[Vector], w: List[Vector]) -> List[Vector]:
    """Basis of span(u) & span(w) inside a space of dimension n."""
    if not u or not w:
        return []
    left = SparseMatrix.from_columns(n, field, u)
    right = SparseMatrix.from_columns(n, field, w)
    stacked = left.hstack(-right)
    basis = []
    for z in kernel_basis(stacked):
        a = {i: v for i, v in z.items() if i < len(u)}
        basis.append(left.apply(a))
    return basis


def _split_shared(c: FilteredComplex, classes: List[Vector], levels: List[Level],
                  images: List[Vector], shared: List[Vector], n: int):
    """
    Reduce images against a basis of the shared subspace first. Classes
    whose image falls into it after recombination are returned first.
    """
    field = c.field
    stacked = SparseMatrix.from_columns(n, field, shared + images)
    red = column_reduce(stacked)
    offset = len(shared)
    inside, inside_levels, inside_images = [], [], []
    outside, outside_levels = [], []
    zero = set(red.zero_columns())
    for j in range(len(classes)):
        col = red.change_of_basis.column(offset + j)
        v = _combine(c, classes, col, offset)
        img = _combine(c, images, col, offset)
        if offset + j in zero:
            inside.append(v)
            inside_levels.append(levels[j])
            inside_images.append(img)
        else:
            outside.append(v)
            outside_levels.append(levels[j])
    return inside, inside_levels, inside_images, outside, outside_levels


def _reorthogonalize(c: FilteredComplex, k: int, bases: DegreeBases, classes: List[Vector]) -> List[Vector]:
    """
    Replace each class vector by its remainder after subtracting the best
    approximation from the boundaries and the earlier classes, eliminating
    leading generators in filtration order.
    """
    field = c.field
    rank = {g: i for i, g in enumerate(c.generator_order(k))}
    owner: Dict[int, Vector] = {}

    def lead(v: Vector) -> int:
        return max(v, key=rank.__getitem__)

    def reduce(v: Vector) -> Vector:
        v = dict(v)
        while v:
            g = lead(v)
            w = owner.get(g)
            if w is None:
                return v
            v = vec_axpy(field, v, field.neg(field.div(v[g], w[g])), w)
        return v

    for b in bases.B:
        r = reduce(b)
        if r:
            owner[lead(r)] = r
    out = []
    for h in classes:
        r = reduce(h)
        if not r:
            raise OrthogonalityError(f"class vector in degree {k} collapsed during re-orthogonalization")
        owner[lead(r)] = r
        out.append(r)
    return out


def _ensure_orthogonal(c: FilteredComplex, k: int, bases: DegreeBases, cls: "LegClasses", label: str) -> None:
    vectors = bases.A + bases.B + cls.all
    if is_orthogonal_basis(c, k, vectors):
        return
    logger.warning("%s basis in degree %d is not orthogonal; projecting class vectors", label, k)
    fixed = _reorthogonalize(c, k, bases, cls.all)
    n1, n2 = len(cls.matched), len(cls.matched) + len(cls.free)
    cls.matched, cls.free, cls.vanishing = fixed[:n1], fixed[n1:n2], fixed[n2:]
    cls.matched_levels = [c.filtration_of(k, v) for v in cls.matched]
    cls.free_levels = [c.filtration_of(k, v) for v in cls.free]
    cls.vanishing_levels = [c.filtration_of(k, v) for v in cls.vanishing]
    if not is_orthogonal_basis(c, k, bases.A + bases.B + cls.all):
        raise OrthogonalityError(f"{label} basis in degree {k} is not orthogonal")


def _decompose_degree(cospan: FilteredCospan, k: int, up_bases: DegreeBases, down_bases: DegreeBases):
    up, down, mid = cospan.up, cospan.down, cospan.mid
    hom = mid.homology(k)
    n = hom.dim

    p_up = homology_induced_map(up, mid, cospan.psi_up_at(k), up_bases.H, k, hom)
    p_down = homology_induced_map(down, mid, cospan.psi_down_at(k), down_bases.H, k, hom)

    # H lists are already in filtration order (lowest first)
    i_up, i_up_lv, img_up, van_up, van_up_lv = _split_kernel(up, up_bases.H, up_bases.H_levels, p_up)
    i_dn, i_dn_lv, img_dn, van_dn, van_dn_lv = _split_kernel(down, down_bases.H, down_bases.H_levels, p_down)

    shared = _intersection(n, mid.field, img_up, img_dn)
    x0, x0_lv, x0_img, free_up, free_up_lv = _split_shared(up, i_up, i_up_lv, img_up, shared, n)
    y0, y0_lv, y0_img, free_dn, free_dn_lv = _split_shared(down, i_dn, i_dn_lv, img_dn, shared, n)

    up_cls = LegClasses(free=free_up, free_levels=free_up_lv, vanishing=van_up, vanishing_levels=van_up_lv)
    dn_cls = LegClasses(free=free_dn, free_levels=free_dn_lv, vanishing=van_dn, vanishing_levels=van_dn_lv)

    if x0:
        y_span = SparseMatrix.from_columns(n, mid.field, y0_img)
        coords = []
        for img in x0_img:
            x = solve_in_span(y_span, img)
            if x is None:
                raise OrthogonalityError(f"shared class image in degree {k} left the down span")
            coords.append(vec_from_dense(mid.field, x))
        m = SparseMatrix.from_columns(len(y0), mid.field, coords)
        for v, w, lv_up, lv_dn in match_filtered_iso(m, x0_lv, y0_lv, lam=cospan.lam):
            up_cls.matched.append(_combine(up, x0, v))
            up_cls.matched_levels.append(lv_up)
            dn_cls.matched.append(_combine(down, y0, w))
            dn_cls.matched_levels.append(lv_dn)

    if Config.ASSERT_ORTHOGONAL:
        _ensure_orthogonal(up, k, up_bases, up_cls, "up")
        _ensure_orthogonal(down, k, down_bases, dn_cls, "down")

    summands = [Summand.gt(k, lu, ld) for lu, ld in zip(up_cls.matched_levels, dn_cls.matched_levels)]
    summands += [Summand(SummandKind.NE, k, lv) for lv in up_cls.free_levels]
    summands += [Summand(SummandKind.SE, k, lv) for lv in dn_cls.free_levels]
    summands += [Summand(SummandKind.UP_INF, k, lv) for lv in up_cls.vanishing_levels]
    summands += [Summand(SummandKind.DOWN_NEG_INF, k, lv) for lv in dn_cls.vanishing_levels]
    boxes = n - len(up_cls.matched) - len(up_cls.free) - len(dn_cls.free)
    summands += [Summand(SummandKind.BOX, k)] * boxes
    witness = DegreeWitness(k, up_bases, down_bases, up_cls, dn_cls, n)
    return summands, witness


def decompose(c: FilteredCospan) -> Decomposition:
    """
    Decompose a cospan into standard elementary summands.

    Args:
        c: A valid cospan

    Returns:
        Decomposition with the summand multiset (sorted) and per-degree witness bases

    Raises:
        ValidationError: If the cospan is invalid
        OrthogonalityError: If a constructed basis cannot be made orthogonal
    """
    problems = c.validate()
    if problems:
        raise ValidationError(problems)
    up_dec = decompose_filtered(c.up)
    down_dec = decompose_filtered(c.down)

    summands: List[Summand] = []
    for p in up_dec.pairs:
        if p.birth < p.death:
            summands.append(Summand(SummandKind.UP, p.degree, p.birth, p.death))
    for p in down_dec.pairs:
        if p.birth > p.death:
            summands.append(Summand(SummandKind.DOWN, p.degree, p.birth, p.death))

    witness: Dict[int, DegreeWitness] = {}
    for k in c.degrees:
        found, witness[k] = _decompose_degree(
            c, k, up_dec.bases.get(k, DegreeBases()), down_dec.bases.get(k, DegreeBases()))
        summands += found

    summands.sort()
    logger.info("decomposed %r into %d summands", c, len(summands))
    return Decomposition(c, summands, witness)


def _leg_check(cx: FilteredComplex, k: int, b: DegreeBases, classes: LegClasses, above: DegreeBases,
               label: str) -> List[str]:
    problems = []
    basis = b.A + b.B + classes.all
    if len(basis) != cx.dim(k) or not is_orthogonal_basis(cx, k, basis):
        problems.append(f"{label} degree {k}: basis is not an orthogonal basis")
    d = cx.boundary(k)
    cycles = b.B + classes.all
    if any(d.apply(z) for z in cycles):
        problems.append(f"{label} degree {k}: boundary or class vector is not a cycle")
    kernel_dim = cx.dim(k) - len(column_reduce(d).pivots)
    if len(cycles) != kernel_dim:
        problems.append(f"{label} degree {k}: {len(cycles)} cycle vectors for a kernel of dimension {kernel_dim}")
    d_up = cx.boundary(k + 1)
    if len(above.A) != len(b.B) or any(d_up.apply(a) != bv for a, bv in zip(above.A, b.B)):
        problems.append(f"{label} degree {k}: boundary does not map A_(k+1) onto B_k")
    return problems


def check_conditions(c: FilteredCospan, d: Decomposition) -> List[str]:
    """
    Check the four conditions the witness bases must satisfy: orthogonality,
    kernel spanning, the boundary bijection A_(k+1) -> B_k, and the
    relations between class images in H_k(D).

    Returns:
        Violations; empty when all four hold
    """
    problems: List[str] = []
    for k, w in sorted(d.witness.items()):
        above = d.witness.get(k + 1)
        problems += _leg_check(c.up, k, w.up, w.up_classes, above.up if above else DegreeBases(), "up")
        problems += _leg_check(c.down, k, w.down, w.down_classes, above.down if above else DegreeBases(), "down")

        hom = c.mid.homology(k)

        def img(leg: str, vs: List[Vector]) -> SparseMatrix:
            if leg == "up":
                return homology_induced_map(c.up, c.mid, c.psi_up_at(k), vs, k, hom)
            return homology_induced_map(c.down, c.mid, c.psi_down_at(k), vs, k, hom)

        xm, ym = img("up", w.up_classes.matched), img("down", w.down_classes.matched)
        if xm != ym:
            problems.append(f"degree {k}: matched classes have different images")
        independent = img("up", w.up_classes.matched + w.up_classes.free).hstack(
            img("down", w.down_classes.free))
        if len(column_reduce(independent).pivots) != independent.cols:
            problems.append(f"degree {k}: matched and free images are linearly dependent")
        for leg in ("up", "down"):
            vanishing = getattr(w, f"{leg}_classes").vanishing
            if not img(leg, vanishing).is_zero():
                problems.append(f"degree {k}: a vanishing {leg} class has nonzero image")
    if problems:
        logger.warning("decomposition failed %d condition checks", len(problems))
    return problems


def homology_counts(d: Decomposition) -> Dict[int, Tuple[int, int]]:
    """
    Per degree, dim H_k(D) next to the number of GT, NE, SE and Box summands in degree k.
    The two agree for every correct decomposition.
    """
    counted = {SummandKind.GT, SummandKind.NE, SummandKind.SE, SummandKind.BOX}
    out = {}
    for k in d.cospan.degrees:
        n = sum(1 for s in d.summands if s.degree == k and s.kind in counted)
        out[k] = (d.cospan.mid.homology_dim(k), n)
    return out
