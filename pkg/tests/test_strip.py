"""Tests for the strip: T, classification, charts, homeomorphisms, flows and distances."""

from fractions import Fraction

import numpy as np
import pytest

from src.config import Config
from src.errors import LambdaMismatchError, StripError
from src.strip import (
    INF,
    ArctanHomeomorphism,
    Cell,
    RationalHomeomorphism,
    Region,
    StripPoint,
    T,
    T_inverse,
    TableHomeomorphism,
    chart,
    classify,
    d_boundary,
    d_boundary_bisect,
    d_int,
    d_int_bisect,
    flow_point,
    from_chart,
    homeomorphism,
    leq,
    parse_knots,
    sampled_leq,
    strictly_less,
)

F = Fraction
LAM = F(2)
TOL = Config.METRIC_TOLERANCE


def point(x, y) -> StripPoint:
    return StripPoint(F(x), F(y), LAM)


def test_glide_reflection():
    """T^2 is a translation along the strip and T^-1 undoes T."""
    print("\n" + "=" * 70)
    print("TEST: glide reflection")
    print("=" * 70)

    p = point(1, -1)
    assert T(p) == point(-3, 3), "T(x, y) = (-2 lam - y, 2 lam - x)"
    assert T(p, 2) == point(-7, 7), "T^2 translates by (-4 lam, 4 lam)"
    assert T_inverse(T(p)) == p
    assert T(p, -3) == T_inverse(T_inverse(T_inverse(p)))
    with pytest.raises(StripError):
        point(3, 2)
    print("✓ T and T^-1 behave")


def test_classification():
    """Every region of the fundamental domain is recognised, and copies carry k."""
    print("\n" + "=" * 70)
    print("TEST: classification")
    print("=" * 70)

    cases = {
        (1, -1): Region.S_INTERIOR,
        (2, 0): Region.EDGE_RIGHT,
        (0, -2): Region.EDGE_BOTTOM,
        (2, -2): Region.CORNER,
        (-3, 0): Region.L_INTERIOR,
        (-2, 0): Region.EDGE_LEFT,
        (-3, -1): Region.BOUNDARY,
        (0, 3): Region.A_INTERIOR,
        (0, 2): Region.EDGE_TOP,
        (1, 3): Region.BOUNDARY,
    }
    for (x, y), region in cases.items():
        k, found = classify(point(x, y))
        assert (k, found) == (0, region), f"({x}, {y}) should be {region.value} in copy 0, got {k} {found.value}"
        for n in (-2, 1, 3):
            assert classify(T(point(x, y), n)) == (n, region), f"T^{n} moves ({x}, {y}) to copy {n}"
    print(f"✓ {len(cases)} regions in four copies")


def test_float_points_near_the_boundary():
    """Float coordinates off the boundary line by rounding are still placed on it."""
    print("\n" + "=" * 70)
    print("TEST: float boundary points")
    print("=" * 70)

    for x, y in ((-7.470024381852041, 11.470024381852042), (-6.472165529398267, 10.472165529398268)):
        p = StripPoint(x, y, LAM)
        assert classify(p) == (2, Region.BOUNDARY), f"{p} should sit on the boundary of copy 2"
        assert p.on_boundary()
    assert not StripPoint(-7.4, 11.3, LAM).on_boundary()
    with pytest.raises(StripError):
        StripPoint(-7.4, 11.5, LAM)

    hinted = from_chart(Cell(1, Region.BOUNDARY, "A"), 1 / 3, 1 / 3, LAM)
    assert classify(hinted) == (1, Region.BOUNDARY) and hinted.on_boundary()
    inner = from_chart(Cell(-1, Region.S_INTERIOR, "L"), 0.25, 0.5, LAM)
    assert classify(inner) == (-1, Region.L_INTERIOR), "the region is read off the chart coordinates"
    assert sampled_leq(StripPoint(1.0, -1.0, LAM), StripPoint(1.0 + TOL / 2, -1.0, LAM))
    assert not leq(StripPoint(1.0, -1.0, LAM), StripPoint(1.0 + TOL / 2, -1.0, LAM)), "plain leq is exact"
    print("✓ rounding does not move points off the boundary")


def test_charts_round_trip():
    """from_chart inverts chart in every piece."""
    print("\n" + "=" * 70)
    print("TEST: charts")
    print("=" * 70)

    for x, y in ((1, -1), (-3, 0), (0, 3), (2, -2)):
        for n in (-1, 0, 2):
            p = T(point(x, y), n)
            c1, c2 = chart(p)
            assert from_chart(p.cell, c1, c2, LAM) == p, f"chart round trip failed at {p}"
    assert chart(point(-3, 0)) == (F(-1), F(0)), "L chart is (-2 lam - x, y)"
    assert chart(point(0, 3)) == (F(0), F(1)), "A chart is (x, 2 lam - y)"
    print("✓ charts invert")


def test_order():
    """(x, y) <= (x', y') iff x >= x' and y <= y'."""
    print("\n" + "=" * 70)
    print("TEST: order")
    print("=" * 70)

    a, b = point(1, -1), point(0, 0)
    assert leq(a, b) and strictly_less(a, b)
    assert not leq(b, a)
    assert leq(a, a) and not strictly_less(a, a)
    assert leq(point(1, -1), point(1, 0)) and not strictly_less(point(1, -1), point(1, 0))
    print("✓ order and strict order")


def test_homeomorphisms():
    """Both families fix the bound, invert each other and flow additively."""
    print("\n" + "=" * 70)
    print("TEST: homeomorphisms")
    print("=" * 70)

    rational = RationalHomeomorphism(LAM)
    assert rational.xi(F(1)) == 1 and rational.phi(F(1)) == 1
    assert rational.xi(LAM) == INF and rational.phi(-INF) == -LAM
    assert rational.rho_value(F(1), F(0)) == F(1), "rho_1(0) = phi(1)"
    assert rational.rho_value(F(5), LAM) == LAM, "the bound does not move"

    arctan = ArctanHomeomorphism(LAM)
    assert abs(arctan.xi(F(1)) - 1.0) < TOL, "xi(lam / 2) = tan(pi / 4)"
    assert abs(arctan.phi(arctan.xi(F(1, 3))) - 1 / 3) < TOL

    table = TableHomeomorphism(LAM, [(0, 0), (1, 1)])
    for u in (F(-2), F(1, 2), F(3)):
        assert table.xi(table.phi(u)) == u, f"table xi should invert phi at {u}"
    origin = homeomorphism("table", LAM)
    for u in (F(-5), F(-1, 3), F(0), F(2, 7), F(9)):
        assert origin.phi(u) == rational.phi(u), "one knot at the origin gives the rational family"
    assert parse_knots("-1:-1, 1:3/2") == [(F(-1), F(-1)), (F(1), F(3, 2))]
    for bad in ("1", "a:b", "0:0:0"):
        with pytest.raises(ValueError):
            parse_knots(bad)
    with pytest.raises(ValueError):
        homeomorphism("table", LAM, [(0, 0), (1, 0)])

    assert homeomorphism("rational", LAM).kind == "rational"
    with pytest.raises(ValueError):
        homeomorphism("bogus", LAM)
    with pytest.raises(LambdaMismatchError):
        rational.check_lambda(F(3))
    print("✓ arctan, rational and table families")


def test_flow_is_additive():
    """Flowing by a then b equals flowing by a + b and keeps the region."""
    print("\n" + "=" * 70)
    print("TEST: flow additivity")
    print("=" * 70)

    phi = RationalHomeomorphism(LAM)
    for x, y in ((1, -1), (-3, 0), (0, 3), (2, 0)):
        p = T(point(x, y), 1)
        twice = flow_point(flow_point(p, F(1, 4), phi), F(1, 4), phi)
        once = flow_point(p, F(1, 2), phi)
        assert twice == once, f"flow is not additive at {p}"
        assert once.cell.region is p.cell.region, "flows preserve the region"
        assert leq(p, once) or p.cell.region is Region.CORNER, "flows move points up the order"
    print("✓ flows compose")


def test_interleaving_distance_closed_form():
    """d_int is the chart distance inside a cell and infinite across cells."""
    print("\n" + "=" * 70)
    print("TEST: d_int closed form")
    print("=" * 70)

    phi = RationalHomeomorphism(LAM)
    assert d_int(point(0, 0), point(F(1, 2), 0), phi) == F(1, 3), "xi(1/2) = 1/3 for the rational family"
    assert d_int(point(0, 0), point(0, 0), phi) == 0
    assert d_int(point(1, -1), T(point(1, -1)), phi) == INF, "different copies are infinitely far apart"
    assert d_int(point(1, -1), point(-3, 0), phi) == INF, "S and L are infinitely far apart"
    print("✓ d_int closed form")


def test_boundary_distance_closed_form():
    """d_boundary is half the xi-gap on L and A interiors and infinite on S."""
    print("\n" + "=" * 70)
    print("TEST: d_boundary closed form")
    print("=" * 70)

    phi = RationalHomeomorphism(LAM)
    assert d_boundary(point(-3, 0), phi) == F(1, 2)
    assert d_boundary(point(1, -1), phi) == INF
    assert d_boundary(point(-3, -1), phi) == 0, "boundary points are at distance 0"
    assert abs(d_boundary_bisect(point(-3, 0), phi) - 0.5) < TOL
    print("✓ d_boundary closed form")


def test_d_int_matches_bisection():
    """Random same-cell pairs in S, L and A: the closed form agrees with the definition."""
    print("\n" + "=" * 70)
    print("TEST: d_int against bisection")
    print("=" * 70)

    rng = np.random.default_rng(11)
    checked = 0
    for phi in (RationalHomeomorphism(LAM), ArctanHomeomorphism(LAM)):
        for _ in range(40):
            x1, y1, x2, y2 = (F(int(j), 8) for j in rng.integers(-15, 16, size=4))
            v, w = point(x1, y1), point(x2, y2)
            closed = float(d_int(v, w, phi))
            assert abs(closed - d_int_bisect(v, w, phi)) < TOL, f"{v} {w} under {phi!r}"
            checked += 1
        for region, name in ((Region.L_INTERIOR, "L"), (Region.A_INTERIOR, "A")):
            for _ in range(20):
                k = int(rng.integers(-2, 3))
                ends = []
                while len(ends) < 2:
                    a, b = sorted(int(j) for j in rng.integers(-15, 16, size=2))
                    if a < b:
                        ends.append(from_chart(Cell(k, region, name), F(a, 8), F(b, 8), LAM))
                v, w = ends
                assert v.cell == w.cell, "both ends lie in one open cell"
                closed = float(d_int(v, w, phi))
                assert abs(closed - d_int_bisect(v, w, phi)) < TOL, f"{v} {w} under {phi!r}"
                checked += 1
    print(f"✓ {checked} pairs agree")


def test_boundary_criterion_matches_bisection():
    """Random L and A interior points: the closed form agrees with the criterion under both families."""
    print("\n" + "=" * 70)
    print("TEST: d_boundary against bisection")
    print("=" * 70)

    rng = np.random.default_rng(12)
    checked = 0
    for phi in (RationalHomeomorphism(LAM), ArctanHomeomorphism(LAM)):
        for region, name in ((Region.L_INTERIOR, "L"), (Region.A_INTERIOR, "A")):
            for _ in range(40):
                a, b = sorted(int(j) for j in rng.integers(-15, 16, size=2))
                if a == b:
                    continue
                p = from_chart(Cell(int(rng.integers(-2, 3)), region, name), F(a, 8), F(b, 8), LAM)
                assert abs(float(d_boundary(p, phi)) - d_boundary_bisect(p, phi)) < TOL, (
                    f"mismatch at {p} under {phi!r}")
                checked += 1
    print(f"✓ {checked} points agree")


def main():
    test_glide_reflection()
    test_classification()
    test_float_points_near_the_boundary()
    test_charts_round_trip()
    test_order()
    test_homeomorphisms()
    test_flow_is_additive()
    test_interleaving_distance_closed_form()
    test_boundary_distance_closed_form()
    test_d_int_matches_bisection()
    test_boundary_criterion_matches_bisection()
    print("\n" + "=" * 70)
    print("ALL STRIP TESTS PASSED")
    print("=" * 70)


if __name__ == "__main__":
    main()
