"""Tests for chain complexes, filtered complexes, levels and barcode reduction."""

from fractions import Fraction

import pytest

from src.algebra import QQ, PrimeField, SparseMatrix
from src.complex import (
    NEG_INF,
    POS_INF,
    ChainComplex,
    FilteredComplex,
    Flavor,
    FlowLevel,
    compare_levels,
    decompose_filtered,
    format_level,
    is_orthogonal_basis,
    make_flow_level,
    parse_level,
    spectral_invariant,
)
from src.errors import ChainComplexError, DimensionError, FiltrationError

F = Fraction
LAM = F(2)


def circle(field=QQ) -> ChainComplex:
    d1 = SparseMatrix.from_rows([[-1, 0, 1], [1, -1, 0], [0, 1, -1]], field)
    return ChainComplex(field, {0: ["a", "b", "c"], 1: ["ab", "bc", "ca"]}, {1: d1})


def interval(flavor=Flavor.ASCENDING) -> FilteredComplex:
    """Two vertices joined by one edge; the edge has the extreme level."""
    sign = 1 if flavor is Flavor.ASCENDING else -1
    d1 = SparseMatrix.from_rows([[-1], [1]], QQ)
    return FilteredComplex(QQ, flavor, LAM, {0: ["v0", "v1"], 1: ["e"]},
                           {0: [F(0), sign * F(1, 2)], 1: [sign * F(1)]}, {1: d1})


def test_circle_homology():
    """A triangle boundary has one component and one loop."""
    print("\n" + "=" * 70)
    print("TEST: circle homology")
    print("=" * 70)

    for field in (QQ, PrimeField(2), PrimeField(5)):
        c = circle(field)
        assert c.check() == [], "the circle boundary squares to zero"
        assert c.homology_dim(0) == 1, f"one component over {field.name}"
        assert c.homology_dim(1) == 1, f"one loop over {field.name}"
        assert c.euler_characteristic() == 0
    h1 = circle().homology(1)
    assert h1.dim == 1
    assert not h1.is_boundary({0: 1, 1: 1, 2: 1}), "the loop is not a boundary"
    h0 = circle().homology(0)
    assert h0.is_boundary({0: -1, 1: 1}), "b - a bounds the edge ab"
    print("✓ H0 = H1 = 1 over every field")


def test_check_reports_nonzero_square():
    """d o d != 0 is reported, not raised."""
    print("\n" + "=" * 70)
    print("TEST: d o d check")
    print("=" * 70)

    one = SparseMatrix.identity(1, QQ)
    bad = ChainComplex(QQ, {0: ["a"], 1: ["e"], 2: ["f"]}, {1: one, 2: one})
    problems = bad.check()
    assert len(problems) == 1, f"expected one violation, got {problems}"
    with pytest.raises(ChainComplexError):
        bad.homology(1).coordinates({0: 1})
    print(f"✓ reported: {problems[0]}")


def test_cone_of_identity_is_acyclic():
    """The mapping cone of an identity has no homology; shifts move degrees."""
    print("\n" + "=" * 70)
    print("TEST: cone and shift")
    print("=" * 70)

    c = circle()
    ident = {k: SparseMatrix.identity(c.dim(k), QQ) for k in c.degrees}
    cone = ChainComplex.cone(ident, c, c)
    assert cone.check() == [], "the cone is a complex"
    for k in range(-1, 4):
        assert cone.homology_dim(k) == 0, f"cone of an identity is acyclic in degree {k}"
    shifted = c.shift(1)
    assert shifted.degrees == [-1, 0]
    assert shifted.homology_dim(-1) == 1 and shifted.homology_dim(0) == 1
    print("✓ cone(id) is acyclic")


def test_filtered_levels_and_truncation():
    """Chain levels are max (ascending) or min (descending) over the support."""
    print("\n" + "=" * 70)
    print("TEST: filtration levels")
    print("=" * 70)

    up = interval()
    assert up.filtration_of(0, {0: 1, 1: 1}) == F(1, 2)
    assert up.filtration_of(0, {}) == NEG_INF, "the zero chain sits at -inf"
    assert up.truncate(F(1, 2)) == {0: [0, 1], 1: []}
    down = interval(Flavor.DESCENDING)
    assert down.filtration_of(0, {0: 1, 1: 1}) == F(-1, 2)
    assert down.filtration_of(1, {}) == POS_INF
    assert up.conjugate() == down, "conjugation negates levels and swaps flavor"
    assert up.conjugate().conjugate() == up, "conjugation is an involution"
    with pytest.raises(DimensionError):
        FilteredComplex(QQ, Flavor.ASCENDING, LAM, {0: ["a"]}, {0: [F(0), F(1)]})
    print("✓ levels, truncation and conjugation")


def test_filtered_validation():
    """Boundaries that raise the level and levels at the bound are violations."""
    print("\n" + "=" * 70)
    print("TEST: filtered validation")
    print("=" * 70)

    d1 = SparseMatrix.identity(1, QQ)
    raising = FilteredComplex(QQ, Flavor.ASCENDING, LAM, {0: ["v"], 1: ["e"]}, {0: [F(1)], 1: [F(0)]}, {1: d1})
    assert len(raising.monotonicity_violations()) == 1
    with pytest.raises(FiltrationError):
        decompose_filtered(raising)
    edge = FilteredComplex(QQ, Flavor.ASCENDING, LAM, {0: ["v"]}, {0: [LAM]})
    assert len(edge.bound_violations()) == 1, "levels must lie strictly inside the bound"
    assert interval().validate() == []
    print("✓ violations are listed")


def test_ascending_barcode():
    """One finite bar and one essential class for the ascending interval."""
    print("\n" + "=" * 70)
    print("TEST: ascending barcode")
    print("=" * 70)

    dec = decompose_filtered(interval())
    assert [(p.degree, p.birth, p.death) for p in dec.pairs] == [(0, F(1, 2), F(1))]
    assert [(e.degree, e.birth, e.death) for e in dec.essentials] == [(0, F(0), POS_INF)]
    b0 = dec.bases[0]
    assert len(b0.B) == 1 and len(b0.H) == 1 and len(dec.bases[1].A) == 1
    assert is_orthogonal_basis(interval(), 0, b0.all), "reduction bases are orthogonal"
    print("✓ E_0(1/2, 1) plus an essential class at 0")


def test_descending_barcode():
    """Descending complexes report bars in their own convention."""
    print("\n" + "=" * 70)
    print("TEST: descending barcode")
    print("=" * 70)

    dec = decompose_filtered(interval(Flavor.DESCENDING))
    assert [(p.degree, p.birth, p.death) for p in dec.pairs] == [(0, F(-1, 2), F(-1))]
    assert all(p.birth >= p.death for p in dec.pairs), "descending pairs have birth >= death"
    assert [(e.birth, e.death) for e in dec.essentials] == [(F(0), NEG_INF)]
    print("✓ E_0(-1/2, -1) plus an essential class at 0")


def test_orthogonality_criterion():
    """A basis hiding a lower-level vector in its span is not orthogonal."""
    print("\n" + "=" * 70)
    print("TEST: orthogonality criterion")
    print("=" * 70)

    c = interval()
    assert is_orthogonal_basis(c, 0, [{0: 1}, {1: 1}])
    assert not is_orthogonal_basis(c, 0, [{0: 1, 1: 1}, {1: 1}]), "v0 lies in the span but is not counted"
    assert not is_orthogonal_basis(c, 0, [{0: 1}, {0: 2}]), "dependent sets are never orthogonal"
    print("✓ criterion separates the two bases")


def test_spectral_invariant():
    """A cycle's class level is the best level over homologous cycles."""
    print("\n" + "=" * 70)
    print("TEST: spectral invariant")
    print("=" * 70)

    c = interval()
    assert spectral_invariant(c, 0, {1: 1}) == F(0), "v1 is homologous to v0 at level 0"
    assert spectral_invariant(c, 0, {0: -1, 1: 1}) == NEG_INF, "boundaries sit at -inf"
    print("✓ rho(v1) = 0")


def test_flow_levels():
    """Flowed levels stay exact when rational and compare exactly otherwise."""
    print("\n" + "=" * 70)
    print("TEST: flowed levels")
    print("=" * 70)

    assert make_flow_level(F(0), F(1), LAM) == F(1), "phi(1) = lam / 2 for arctan"
    assert make_flow_level(F(1, 3), F(0), LAM) == F(1, 3), "no shift, no change"
    moved = make_flow_level(F(1, 3), F(1, 2), LAM)
    assert isinstance(moved, FlowLevel)
    assert compare_levels(moved, F(1, 3)) == 1, "a positive shift raises the level"
    assert compare_levels(moved, LAM) == -1, "flowed levels stay below the bound"
    assert compare_levels(-moved, F(-1, 3)) == -1
    assert parse_level(format_level(moved), LAM) == moved
    assert format_level(moved) == "1/3@1/2"
    print(f"✓ {moved} compares exactly")


def main():
    test_circle_homology()
    test_check_reports_nonzero_square()
    test_cone_of_identity_is_acyclic()
    test_filtered_levels_and_truncation()
    test_filtered_validation()
    test_ascending_barcode()
    test_descending_barcode()
    test_orthogonality_criterion()
    test_spectral_invariant()
    test_flow_levels()
    print("\n" + "=" * 70)
    print("ALL COMPLEX TESTS PASSED")
    print("=" * 70)


if __name__ == "__main__":
    main()
