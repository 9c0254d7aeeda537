"""
Worked examples with known decompositions.

Each builder returns a cospan (or a simplicial input); `EXPECTED` lists the
summands each one decomposes into, sorted the way `decompose` sorts them.
"""

from fractions import Fraction
from typing import Dict, List, Optional

from ..algebra import Field, QQ, SparseMatrix, field_from_name
from ..complex import ChainComplex, FilteredComplex, Flavor
from ..cospan import FilteredCospan, Summand, SummandKind
from ..errors import SummandError
from ..simplicial import SimplicialInput, build_pinned_cospan

LAMBDA = Fraction(2)

F = Fraction


def horn(field_name: str = "Q") -> SimplicialInput:
    """The 0-horn of a tetrahedron with values 1, 0, 0, -1 on its vertices."""
    values = {0: F(1), 1: F(0), 2: F(0), 3: F(-1)}
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    triangles = [(0, 1, 2), (0, 1, 3), (0, 2, 3)]
    return SimplicialInput(LAMBDA, field_name, values, edges + triangles)


def boundary_simplicial(field_name: str = "Q") -> SimplicialInput:
    """
    A triangle v0 v1 v2 with one edge out to each pinned point.

    Vertex 3 sits at -2 and hangs off v0; vertex 4 sits at 2 and joins v1
    and v2.
    """
    values = {0: F(1), 1: F(0), 2: F(-1), 3: F(-2), 4: F(2)}
    simplices = [(0, 3), (0, 1), (0, 2), (1, 2), (1, 4), (2, 4), (0, 1, 2)]
    return SimplicialInput(LAMBDA, field_name, values, simplices)


def _cols(rows: int, field: Field, columns) -> SparseMatrix:
    return SparseMatrix.from_columns(rows, field, [{r: field.coerce(v) for r, v in c.items()} for c in columns])


def boundary_example(field: Field = QQ) -> FilteredCospan:
    """
    The same function as `boundary_simplicial`, entered as explicit matrices.

    D has v0, v1, v2 in degree 0, e1..e6 in degree 1 and s in degree 2, with
    d e1 = v0, d e2 = v1 - v0, d e3 = v2 - v0, d e4 = v2 - v1, d e5 = v1,
    d e6 = v2 and d s = e2 - e3 + e4. C_up keeps e1..e4, C_down keeps e2..e6.
    """
    verts = ["v0", "v1", "v2"]
    edge_d = {
        "e1": {0: 1}, "e2": {0: -1, 1: 1}, "e3": {0: -1, 2: 1},
        "e4": {1: -1, 2: 1}, "e5": {1: 1}, "e6": {2: 1},
    }
    tri_d = {"e2": 1, "e3": -1, "e4": 1}
    values = {"v0": F(1), "v1": F(0), "v2": F(-1)}
    ends = {"e1": [F(-2), F(1)], "e2": [F(1), F(0)], "e3": [F(1), F(-1)],
            "e4": [F(0), F(-1)], "e5": [F(0), F(2)], "e6": [F(-1), F(2)]}
    tri_values = [F(1), F(0), F(-1)]

    def leg(edges: List[str], flavor: Flavor) -> FilteredComplex:
        pick = max if flavor is Flavor.ASCENDING else min
        gens = {0: list(verts), 1: list(edges), 2: ["s"]}
        levels = {0: [values[v] for v in verts], 1: [pick(ends[e]) for e in edges], 2: [pick(tri_values)]}
        bds = {
            1: _cols(3, field, [edge_d[e] for e in edges]),
            2: _cols(len(edges), field, [{i: tri_d[e] for i, e in enumerate(edges) if e in tri_d}]),
        }
        return FilteredComplex(field, flavor, LAMBDA, gens, levels, bds)

    all_edges = ["e1", "e2", "e3", "e4", "e5", "e6"]
    up_edges = ["e1", "e2", "e3", "e4"]
    down_edges = ["e2", "e3", "e4", "e5", "e6"]
    mid = ChainComplex(field, {0: verts, 1: all_edges, 2: ["s"]}, {
        1: _cols(3, field, [edge_d[e] for e in all_edges]),
        2: _cols(6, field, [{i: tri_d[e] for i, e in enumerate(all_edges) if e in tri_d}]),
    })

    def include(edges: List[str]) -> Dict[int, SparseMatrix]:
        return {
            0: SparseMatrix.identity(3, field),
            1: _cols(6, field, [{all_edges.index(e): 1} for e in edges]),
            2: SparseMatrix.identity(1, field),
        }

    return FilteredCospan(leg(up_edges, Flavor.ASCENDING), leg(down_edges, Flavor.DESCENDING), mid,
                          include(up_edges), include(down_edges))


def cubic(field: Field = QQ) -> FilteredCospan:
    """An interval with one local maximum p at 1 and one local minimum q at -1, relative to its ends."""
    up = FilteredComplex(field, Flavor.ASCENDING, LAMBDA, {0: ["q"], 1: ["p"]}, {0: [F(-1)], 1: [F(1)]},
                         {1: SparseMatrix.identity(1, field)})
    down = FilteredComplex(field, Flavor.DESCENDING, LAMBDA, {0: ["p"], 1: ["q"]}, {0: [F(1)], 1: [F(-1)]},
                           {1: SparseMatrix.identity(1, field)})
    mid = ChainComplex(field, {1: ["x"]})
    return FilteredCospan(up, down, mid)


def trivial_morse(betti: Dict[int, int], field: Field = QQ) -> FilteredCospan:
    """No critical points: empty legs and D with zero differential of the given dimensions."""
    mid = ChainComplex(field, {k: [f"h{k}_{i}" for i in range(n)] for k, n in betti.items()})
    return FilteredCospan(FilteredComplex(field, Flavor.ASCENDING, LAMBDA),
                          FilteredComplex(field, Flavor.DESCENDING, LAMBDA), mid)


def morse_summary(k: int, n: int, case: str, boxes: Optional[Dict[int, int]] = None,
                  field: Field = QQ) -> FilteredCospan:
    """
    One critical point of index k and value 0 on an n-manifold.

    Args:
        k: Index, between 1 and n - 1
        n: Dimension
        case: "i" when only the ascending disk is essential, "ii" when only
            the descending disk is, "iii" when both are (needs n = 2k)
        boxes: Extra homology of the manifold relative to its boundary, by degree

    Returns:
        A cospan with zero differentials throughout
    """
    if case not in ("i", "ii", "iii"):
        raise SummandError(f"unknown case {case!r}")
    if case == "iii" and n != 2 * k:
        raise SummandError("both disks can only be essential when n = 2k")
    image_degree = n - k if case == "i" else k
    dims = dict(boxes or {})
    dims[image_degree] = dims.get(image_degree, 0) + 1
    mid = ChainComplex(field, {j: [f"h{j}_{i}" for i in range(m)] for j, m in dims.items()})
    up = FilteredComplex(field, Flavor.ASCENDING, LAMBDA, {k: ["p"]}, {k: [F(0)]})
    down = FilteredComplex(field, Flavor.DESCENDING, LAMBDA, {n - k: ["p"]}, {n - k: [F(0)]})
    image = SparseMatrix.from_columns(dims[image_degree], field, [{dims[image_degree] - 1: field.one}])
    psi_up = {k: image} if case in ("ii", "iii") else {}
    psi_down = {n - k: image} if case in ("i", "iii") else {}
    return FilteredCospan(up, down, mid, psi_up, psi_down)


def morse_endpoint(n: int, top: bool = False, field: Field = QQ) -> FilteredCospan:
    """A disk with a single minimum at 0 (or a single maximum when `top`)."""
    lo, hi = (n, 0) if top else (0, n)
    mid = ChainComplex(field, {n: ["h"]})
    up = FilteredComplex(field, Flavor.ASCENDING, LAMBDA, {lo: ["p"]}, {lo: [F(0)]})
    down = FilteredComplex(field, Flavor.DESCENDING, LAMBDA, {hi: ["p"]}, {hi: [F(0)]})
    one = SparseMatrix.identity(1, field)
    if top:
        return FilteredCospan(up, down, mid, {n: one}, {})
    return FilteredCospan(up, down, mid, {}, {n: one})


def _box(k: int) -> Summand:
    return Summand(SummandKind.BOX, k)


EXPECTED: Dict[str, List[Summand]] = {
    "horn": [Summand(SummandKind.UP, 1, F(0), F(1)), Summand.gt(0, up=F(-1), down=F(1))],
    "boundary": [
        Summand(SummandKind.UP, 0, F(-1), F(1)),
        Summand(SummandKind.DOWN, 0, F(1), F(0)),
        Summand(SummandKind.SE, 1, F(-1)),
        _box(1),
    ],
    "cubic": [Summand(SummandKind.UP, 0, F(-1), F(1)), Summand(SummandKind.DOWN, 0, F(1), F(-1)), _box(1)],
    "k1n2_i": [Summand(SummandKind.UP_INF, 1, F(0)), Summand(SummandKind.SE, 1, F(0)), _box(1), _box(2)],
    "k1n2_ii": [Summand(SummandKind.NE, 1, F(0)), Summand(SummandKind.DOWN_NEG_INF, 1, F(0)), _box(1), _box(2)],
    "k1n2_iii": [Summand.gt(1, up=F(0), down=F(0)), _box(1), _box(2)],
    "k2n4_i": [Summand(SummandKind.UP_INF, 2, F(0)), Summand(SummandKind.SE, 2, F(0)), _box(1), _box(4)],
    "k2n4_ii": [Summand(SummandKind.NE, 2, F(0)), Summand(SummandKind.DOWN_NEG_INF, 2, F(0)), _box(1), _box(4)],
    "k2n4_iii": [Summand.gt(2, up=F(0), down=F(0)), _box(1), _box(4)],
}

BARCODES: Dict[str, List[str]] = {
    "horn": ["bar k=0 [-1,1]", "bar k=1 [0,1)"],
    "boundary": ["bar k=0 [-1,1)", "bar k=0 (0,1]", "bar k=0 (-1,2)", "bar k=0 (-2,2)"],
    "k1n2_i": ["bar k=0 (0,2)", "bar k=0 (-2,2)", "bar k=1 [0,2)", "bar k=1 (-2,2)"],
    "k1n2_ii": ["bar k=0 (-2,0)", "bar k=0 (-2,2)", "bar k=1 (-2,0]", "bar k=1 (-2,2)"],
    "k1n2_iii": ["bar k=0 (-2,2)", "bar k=1 (-2,2)", "bar k=1 [0,0]"],
    "k2n4_i": ["bar k=0 (-2,2)", "bar k=1 (0,2)", "bar k=2 [0,2)", "bar k=3 (-2,2)"],
    "k2n4_ii": ["bar k=0 (-2,2)", "bar k=1 (-2,0)", "bar k=2 (-2,0]", "bar k=3 (-2,2)"],
    "k2n4_iii": ["bar k=0 (-2,2)", "bar k=2 [0,0]", "bar k=3 (-2,2)"],
}


def named(name: str, field_name: str = "Q") -> FilteredCospan:
    """Build a catalog entry by its key in EXPECTED."""
    field = field_from_name(field_name)
    if name == "horn":
        return build_pinned_cospan(horn(field_name))
    if name == "boundary":
        return boundary_example(field)
    if name == "cubic":
        return cubic(field)
    if name.startswith("k1n2_"):
        return morse_summary(1, 2, name[5:], {1: 1, 2: 1}, field)
    if name.startswith("k2n4_"):
        return morse_summary(2, 4, name[5:], {1: 1, 4: 1}, field)
    raise KeyError(f"no catalog entry {name!r}")
