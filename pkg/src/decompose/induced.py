"""Maps induced on homology and bases matched across a filtered isomorphism."""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..algebra import SparseMatrix, Vector, column_reduce, vec_from_dense
from ..complex import ChainComplex, FilteredComplex, Flavor, Homology, Level, is_orthogonal_basis
from ..config import Config
from ..errors import ChainComplexError, OrthogonalityError, SingularMapError

logger = logging.getLogger(__name__)


def homology_induced_map(src: ChainComplex, dst: ChainComplex, chain_map: SparseMatrix,
                         src_cycles: Sequence[Vector], degree: int,
                         dst_homology: Optional[Homology] = None) -> SparseMatrix:
    """
    Matrix of the map induced on degree-k homology.

    Args:
        src: Source complex
        dst: Target complex
        chain_map: The chain map in degree k, dst.dim(k) x src.dim(k)
        src_cycles: Cycles of src spanning the classes of interest
        degree: The degree k
        dst_homology: Precomputed homology of dst in degree k

    Returns:
        A dim H_k(dst) x len(src_cycles) matrix; column j holds the class
        coordinates of chain_map(src_cycles[j])
    """
    hom = dst_homology or dst.homology(degree)
    d = src.boundary(degree)
    cols = []
    for j, z in enumerate(src_cycles):
        if d.apply(z):
            raise ChainComplexError(f"source vector {j} is not a cycle in degree {degree}")
        cols.append(vec_from_dense(src.field, hom.coordinates(chain_map.apply(z))))
    return SparseMatrix.from_columns(hom.dim, src.field, cols)


def _filtration_key(level: Level, flavor: Flavor):
    return level if flavor is Flavor.ASCENDING else -level


def _check_orthogonal(field, lam, levels, flavor, vectors, label) -> None:
    names = [f"g{i}" for i in range(len(levels))]
    space = FilteredComplex(field, flavor, Fraction(lam), {0: names}, {0: list(levels)})
    if not is_orthogonal_basis(space, 0, vectors):
        raise OrthogonalityError(f"{label} basis from the matching is not orthogonal")


def match_filtered_iso(phi: SparseMatrix, src_levels: Sequence[Level], dst_levels: Sequence[Level],
                       src_flavor: Flavor = Flavor.ASCENDING,
                       dst_flavor: Flavor = Flavor.DESCENDING,
                       lam=None) -> List[Tuple[Vector, Vector, Level, Level]]:
    """
    Find a basis {v} orthogonal for the source levels whose image {phi v}
    is orthogonal for the target levels.

    Columns are reduced from the lowest to the highest source filtration;
    the pivot of a column is its row of highest target filtration.

    Args:
        phi: Invertible square matrix between two filtered spaces whose
            generator bases carry the given levels
        src_levels: Level of each source basis vector
        dst_levels: Level of each target basis vector
        src_flavor: Whether source levels ascend or descend
        dst_flavor: Whether target levels ascend or descend
        lam: Bound of the surrounding cospan (default from COSPAN_LAMBDA)

    Returns:
        (v, phi v, level of v, level of phi v) per basis vector, in source filtration order
    """
    n = phi.cols
    if phi.rows != n or len(src_levels) != n or len(dst_levels) != n:
        raise SingularMapError(f"matching needs a square map with levels on both sides, got {phi.shape}")
    col_order = sorted(range(n), key=lambda i: (_filtration_key(src_levels[i], src_flavor), i))
    row_order = sorted(range(n), key=lambda i: (_filtration_key(dst_levels[i], dst_flavor), i))
    red = column_reduce(phi, col_order, row_order)
    if len(red.pivots) != n:
        raise SingularMapError(f"map of rank {len(red.pivots)} < {n} cannot be matched")
    pivot_of = red.pivot_of_column
    out = []
    for j in col_order:
        out.append((red.change_of_basis.column(j), red.reduced.column(j),
                    src_levels[j], dst_levels[pivot_of[j]]))
    if Config.ASSERT_ORTHOGONAL and n:
        bound = Config.DEFAULT_LAMBDA if lam is None else lam
        _check_orthogonal(phi.field, bound, src_levels, src_flavor, [o[0] for o in out], "source")
        _check_orthogonal(phi.field, bound, dst_levels, dst_flavor, [o[1] for o in out], "target")
    logger.debug("matched %d vectors across a filtered isomorphism", n)
    return out
