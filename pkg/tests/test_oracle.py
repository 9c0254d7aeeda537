"""Tests for brute-force evaluation of the strip functor and the verification checks."""

from fractions import Fraction

import numpy as np
import pytest

from src.algebra import QQ, PrimeField
from src.cospan import Summand, SummandKind, flow_shift, standard_summand
from src.decompose import decompose
from src.diagram import Diagram, diagram_of_summands
from src.errors import OrderError
from src.fixtures import EXPECTED, named, random_cospan, random_summand
from src.oracle import (
    Oracle,
    boundary_points,
    sample_grid,
    sample_pairs,
    structure_case,
    verify_blocks,
    verify_boundary,
    verify_decomposition,
    verify_exactness,
    verify_functoriality,
)
from src.strip import ArctanHomeomorphism, StripPoint, T

F = Fraction
LAM = F(2)


def point(x, y) -> StripPoint:
    return StripPoint(F(x), F(y), LAM)


def test_point_complex_of_a_gt_block():
    """H_0 of a GT summand is 1 at its corner and 0 just outside it."""
    print("\n" + "=" * 70)
    print("TEST: GT point complexes")
    print("=" * 70)

    oracle = Oracle(standard_summand(Summand.gt(0, up=F(-1), down=F(1)), QQ, LAM))
    assert oracle.h0_dim(point(1, -1)) == 1, "the corner lies in the block"
    assert oracle.h0_dim(point(0, 0)) == 1
    assert oracle.h0_dim(point(F(3, 2), -1)) == 0, "x above the down-level drops the down generator"
    assert oracle.h0_dim(point(1, F(-3, 2))) == 0, "y below the up-level drops the up generator"
    assert oracle.structure_rank(point(1, -1), point(0, 0)) == 1
    assert oracle.point_complex(point(1, -1)) is oracle.point_complex(point(1, -1)), "point complexes are cached"
    with pytest.raises(OrderError):
        oracle.h0_dim(StripPoint(F(0), F(0), F(3)))
    print("✓ block shape at the corner")


def test_structure_cases():
    """Pairs of points are sorted into the cases by chart and copy."""
    print("\n" + "=" * 70)
    print("TEST: structure map cases")
    print("=" * 70)

    s = point(1, -1)
    cases = [
        (s, point(0, 0), "a"),
        (s, point(-3, 0), "b"),
        (s, point(0, 3), "c"),
        (point(-3, 0), T(point(0, 0)), "d"),
        (s, T(s), "h"),
        (s, T(s, 2), "i"),
    ]
    for v, w, case in cases:
        assert structure_case(v, w) == case, f"{v} -> {w} should be case {case}"
    oracle = Oracle(named("horn"))
    with pytest.raises(OrderError):
        oracle.structure_map(point(0, 0), s)
    print(f"✓ {len(cases)} cases")


def test_each_summand_is_its_block():
    """The functor of every standard summand matches its one-point diagram."""
    print("\n" + "=" * 70)
    print("TEST: standard summands against their blocks")
    print("=" * 70)

    summands = [
        Summand(SummandKind.UP, 0, F(-1), F(1)),
        Summand(SummandKind.DOWN, 0, F(1), F(-1, 2)),
        Summand(SummandKind.UP_INF, 0, F(1, 2)),
        Summand(SummandKind.DOWN_NEG_INF, 1, F(0)),
        Summand(SummandKind.NE, 1, F(-1, 2)),
        Summand(SummandKind.SE, 1, F(1)),
        Summand.gt(0, up=F(1), down=F(-1)),
        Summand.gt(1, up=F(-1), down=F(1, 2)),
        Summand(SummandKind.BOX, 1),
    ]
    for s in summands:
        c = standard_summand(s, QQ, LAM)
        report = verify_decomposition(c, diagram_of_summands([s], LAM), seed=1, n_pairs=80,
                                      n_rectangles=20, n_boundary=40, workers=1)
        assert report.passed, f"{s}:\n{report}"
    print(f"✓ {len(summands)} summands")


def test_random_summands_are_their_blocks():
    """Every kind, at 20 random parameter draws each, matches its block on sampled pairs."""
    print("\n" + "=" * 70)
    print("TEST: random summands against their blocks")
    print("=" * 70)

    rng = np.random.default_rng(31)
    for kind in SummandKind:
        for _ in range(20):
            s = random_summand(rng, LAM, kind=kind)
            c = standard_summand(s, QQ, LAM)
            pairs = sample_pairs(sample_grid(c), 40, rng)
            problems = verify_blocks(c, diagram_of_summands([s], LAM), pairs, workers=1)
            assert problems == [], f"{s}: {problems[:3]}"
        print(f"✓ {kind.value}: 20 draws")


def test_catalog_passes_verification():
    """Every worked example passes the block, exactness and boundary checks."""
    print("\n" + "=" * 70)
    print("TEST: catalog verification")
    print("=" * 70)

    for name in EXPECTED:
        c = named(name)
        report = verify_decomposition(c, decompose(c), seed=7, n_pairs=60, n_rectangles=15,
                                      n_boundary=30, workers=2)
        assert report.passed, f"{name}:\n{report}"
        assert report.pairs == 60
        print(f"✓ {name}: {report.pairs} pairs, {report.rectangles} rectangles, {report.boundary} boundary")


def test_random_cospans_pass_verification():
    """Scrambled sums over F2, F5 and Q agree with their diagrams."""
    print("\n" + "=" * 70)
    print("TEST: random verification")
    print("=" * 70)

    fields = [PrimeField(2), PrimeField(5), QQ]
    rng = np.random.default_rng(99)
    for i in range(50):
        field = fields[i % 3]
        c, _ = random_cospan(rng, field, max_generators=12)
        report = verify_decomposition(c, decompose(c), seed=i, n_pairs=40, n_rectangles=30,
                                      n_boundary=20, workers=1)
        assert report.passed, f"case {i} over {field.name}:\n{report}"
    print("✓ 50 random cospans")


def test_flowed_cospans_pass_verification():
    """Cospans flowed under arctan carry float levels and still verify."""
    print("\n" + "=" * 70)
    print("TEST: flowed verification")
    print("=" * 70)

    phi = ArctanHomeomorphism(LAM)
    for name in ("horn", "boundary"):
        for eps in (F(1, 3), F(1, 2)):
            c = flow_shift(named(name), eps, phi)
            report = verify_decomposition(c, decompose(c), seed=7, n_pairs=40, n_rectangles=10,
                                          n_boundary=20, workers=1)
            assert report.passed, f"{name} at eps {eps}:\n{report}"
            assert report.boundary > 0, "boundary samples are placed"
        print(f"✓ {name} at eps 1/3 and 1/2")


def test_wrong_diagram_is_caught():
    """An empty diagram disagrees with the horn at the GT corner."""
    print("\n" + "=" * 70)
    print("TEST: mismatch detection")
    print("=" * 70)

    c = named("horn")
    corner = point(1, -1)
    problems = verify_blocks(c, Diagram([], LAM), [(corner, corner)], workers=1)
    assert len(problems) == 1 and "got=1 expected=0" in problems[0], f"got {problems}"
    print(f"✓ {problems[0]}")


def test_exactness_boundary_and_functoriality():
    """The individual checks pass on the horn and reject malformed input."""
    print("\n" + "=" * 70)
    print("TEST: exactness, boundary and functoriality")
    print("=" * 70)

    c = named("horn")
    oracle = Oracle(c)
    assert verify_exactness(c, (point(1, -1), point(0, 0)), oracle) == []
    assert verify_exactness(c, (point(1, -1), point(-3, 3)), oracle) == []
    with pytest.raises(OrderError):
        verify_exactness(c, (point(0, 0), point(1, -1)), oracle)

    assert verify_boundary(c, boundary_points(c), oracle) == []
    with pytest.raises(OrderError):
        verify_boundary(c, [point(0, 0)], oracle)

    v, w, x = point(1, -1), point(0, 0), T(point(1, -1))
    assert verify_functoriality(c, v, w, x, oracle) == []
    assert verify_functoriality(c, v, point(-3, 0), T(point(0, 0)), oracle) == []
    print("✓ all three checks")


def test_case_h_representatives_are_homotopic():
    """The psi_up and psi_down forms of case h differ by a chain homotopy."""
    print("\n" + "=" * 70)
    print("TEST: case h homotopy")
    print("=" * 70)

    rng = np.random.default_rng(4)
    for name in ("horn", "boundary", "k1n2_iii"):
        oracle = Oracle(named(name))
        grid = [p for p in sample_grid(oracle.cospan) if p.cell.chart == "S"]
        for v, _ in sample_pairs(grid, 10, rng):
            assert oracle.homotopic_case_h(v, T(v)), f"{name}: case h forms differ at {v}"
    with pytest.raises(OrderError):
        Oracle(named("horn")).homotopic_case_h(point(1, -1), point(0, 0))
    print("✓ 30 pairs")


def main():
    test_point_complex_of_a_gt_block()
    test_structure_cases()
    test_each_summand_is_its_block()
    test_random_summands_are_their_blocks()
    test_catalog_passes_verification()
    test_random_cospans_pass_verification()
    test_flowed_cospans_pass_verification()
    test_wrong_diagram_is_caught()
    test_exactness_boundary_and_functoriality()
    test_case_h_representatives_are_homotopic()
    print("\n" + "=" * 70)
    print("ALL ORACLE TESTS PASSED")
    print("=" * 70)


if __name__ == "__main__":
    main()
