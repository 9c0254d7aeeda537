"""Tests for cospans: validation, summands, the text format and morphisms."""

from fractions import Fraction

import numpy as np
import pytest

from src.algebra import QQ, PrimeField, SparseMatrix
from src.complex import ChainComplex, FilteredComplex, Flavor
from src.config import Config
from src.cospan import (
    CospanMorphism,
    FilteredCospan,
    Summand,
    SummandKind,
    boundary_interleaving,
    compose,
    conjugate_cospan,
    differential,
    direct_sum,
    flow_shift,
    format_cospan,
    identity_morphism,
    parse_cospan,
    standard_summand,
    summand_interleaving,
    verify_interleaving,
)
from src.diagram import bottleneck, diagram_of_summands
from src.errors import DimensionError, LambdaMismatchError, ParseError, SummandError
from src.fixtures import boundary_example, cubic, morse_summary, random_cospan, random_summand
from src.strip import ArctanHomeomorphism, RationalHomeomorphism, StripPoint, T, d_int, flow_point

F = Fraction
LAM = F(2)
TOL = Config.METRIC_TOLERANCE


def test_standard_summands_validate():
    """Every standard summand is a valid cospan with the expected pieces."""
    print("\n" + "=" * 70)
    print("TEST: standard summands")
    print("=" * 70)

    summands = [
        Summand(SummandKind.UP, 0, F(-1), F(1)),
        Summand(SummandKind.DOWN, 1, F(1), F(0)),
        Summand(SummandKind.UP_INF, 0, F(1, 2)),
        Summand(SummandKind.DOWN_NEG_INF, 2, F(-1, 2)),
        Summand(SummandKind.NE, 1, F(0)),
        Summand(SummandKind.SE, 1, F(0)),
        Summand.gt(0, up=F(-1), down=F(1)),
        Summand(SummandKind.BOX, 3),
    ]
    for s in summands:
        c = standard_summand(s, QQ, LAM)
        assert c.validate() == [], f"{s} should give a valid cospan"
    gt = standard_summand(summands[6], QQ, LAM)
    assert (gt.up.total_dim, gt.down.total_dim, gt.mid.total_dim) == (1, 1, 1)
    assert gt.up.levels[0] == [F(-1)] and gt.down.levels[0] == [F(1)], "GT keeps up and down levels apart"
    box = standard_summand(summands[7], QQ, LAM)
    assert box.generator_counts() == {"up": {}, "down": {}, "mid": {3: 1}}
    print(f"✓ {len(summands)} summand kinds validate")


def test_summand_parameter_checks():
    """Parameters must fit the kind and lie strictly inside the bound."""
    print("\n" + "=" * 70)
    print("TEST: summand parameter checks")
    print("=" * 70)

    bad = [
        Summand(SummandKind.UP, 0, F(1), F(0)),
        Summand(SummandKind.DOWN, 0, F(0), F(1)),
        Summand(SummandKind.BOX, 0, F(1)),
        Summand(SummandKind.NE, 0, LAM),
        Summand(SummandKind.GT, 0, F(0)),
    ]
    for s in bad:
        with pytest.raises(SummandError):
            s.check(LAM)
    assert str(Summand.gt(0, up=F(-1), down=F(1))) == "GT k=0 up=-1 down=1"
    assert str(Summand(SummandKind.UP, 1, F(0), F(1))) == "Up k=1 a=0 b=1"
    assert str(Summand(SummandKind.BOX, 1)) == "Box k=1"
    assert sorted([Summand(SummandKind.BOX, 0), Summand(SummandKind.UP, 2, F(0), F(1))])[0].kind is SummandKind.UP
    print("✓ bad parameters raise")


def test_validation_lists_problems():
    """A psi map that is not a chain map is reported."""
    print("\n" + "=" * 70)
    print("TEST: cospan validation")
    print("=" * 70)

    up = FilteredComplex(QQ, Flavor.ASCENDING, LAM, {0: ["a"], 1: ["b"]}, {0: [F(0)], 1: [F(1, 2)]},
                         {1: SparseMatrix.identity(1, QQ)})
    down = FilteredComplex(QQ, Flavor.DESCENDING, LAM)
    mid = ChainComplex(QQ, {0: ["v"]})
    c = FilteredCospan(up, down, mid, {0: SparseMatrix.identity(1, QQ)})
    problems = c.validate()
    assert problems == ["psi_up is not a chain map in degree 1"], f"unexpected problems {problems}"

    with pytest.raises(DimensionError):
        FilteredCospan(up, down, mid, {0: SparseMatrix.identity(2, QQ)})
    with pytest.raises(LambdaMismatchError):
        FilteredCospan(up, FilteredComplex(QQ, Flavor.DESCENDING, F(3)), mid)
    print(f"✓ {problems[0]}")


def test_direct_sum_and_conjugate():
    """Direct sums add generators; conjugating twice is the identity."""
    print("\n" + "=" * 70)
    print("TEST: direct sum and conjugation")
    print("=" * 70)

    parts = [cubic(), boundary_example()]
    total = direct_sum(parts)
    assert total.validate() == []
    assert total.up.total_dim == sum(p.up.total_dim for p in parts)
    assert total.mid.total_dim == sum(p.mid.total_dim for p in parts)
    c = boundary_example()
    assert conjugate_cospan(conjugate_cospan(c)) == c
    assert conjugate_cospan(c).validate() == []
    assert flow_shift(c, 0, RationalHomeomorphism(LAM)) is c
    print("✓ sums and conjugates validate")


def test_text_format_round_trip():
    """parse(format(c)) == c, including prime fields and flowed levels."""
    print("\n" + "=" * 70)
    print("TEST: cospan text format")
    print("=" * 70)

    phi = RationalHomeomorphism(LAM)
    cases = [cubic(), boundary_example(), morse_summary(2, 4, "iii", {1: 1, 4: 1}, PrimeField(5)),
             flow_shift(boundary_example(), F(1, 3), phi)]
    for c in cases:
        text = format_cospan(c)
        again = parse_cospan(text)
        assert again == c, f"round trip changed {c!r}"
        assert format_cospan(again) == text, "formatting is stable"
    print(f"✓ {len(cases)} cospans round-trip")


def test_text_format_errors_carry_lines():
    """Parse errors name the offending line."""
    print("\n" + "=" * 70)
    print("TEST: cospan parse errors")
    print("=" * 70)

    cases = {
        "lambda 2\nfield Q\nbogus\n": 3,
        "lambda 2\nfield Q\n  gen 0 a 1\n": 3,
        "lambda 2\nfield Q\nup\n  gen 0 a 1\n  d 1 0:0:1\n": 5,
        "lambda 2\nfield F4\n": 2,
        "lambda 2\nfield Q\nup\n  gen 0 a x\n": 4,
    }
    for text, line in cases.items():
        with pytest.raises(ParseError) as info:
            parse_cospan(text)
        assert info.value.line == line, f"expected line {line}, got {info.value}"
    with pytest.raises(ParseError):
        parse_cospan("field Q\n")
    print(f"✓ {len(cases)} errors located")


def test_morphism_calculus():
    """Identities compose to identities and are closed."""
    print("\n" + "=" * 70)
    print("TEST: morphism calculus")
    print("=" * 70)

    c = boundary_example()
    one = identity_morphism(c)
    assert compose(one, one) == one, "1 o 1 = 1"
    assert differential(one).is_zero(), "the identity is closed"
    assert differential(one).degree == 1
    assert one.filtration_violations() == []
    print("✓ identity is a closed degree-0 morphism")


def test_summand_interleavings():
    """Identity witnesses interleave at the diagram distance and not below."""
    print("\n" + "=" * 70)
    print("TEST: summand interleavings")
    print("=" * 70)

    phi = RationalHomeomorphism(LAM)
    c, x, fwd, bwd = summand_interleaving(Summand(SummandKind.UP_INF, 0, F(0)),
                                          Summand(SummandKind.UP_INF, 0, F(1, 2)), lam=LAM)
    assert verify_interleaving(c, x, F(1, 3), phi, fwd, bwd), "xi(1/2) - xi(0) = 1/3"
    assert not verify_interleaving(c, x, F(1, 4), phi, fwd, bwd), "1/4 is too small"

    c, z, fwd, bwd = boundary_interleaving(Summand(SummandKind.UP, 0, F(0), F(1, 2)), lam=LAM)
    assert verify_interleaving(c, z, F(1, 6), phi, fwd, bwd), "an Up bar dies at half its xi-length"
    assert not verify_interleaving(c, z, F(1, 8), phi, fwd, bwd)
    print("✓ witnesses interleave exactly at the distance")


def random_morphism(rng, source, target, degree):
    """A morphism with random entries in every component."""
    field = source.field
    parts = {}
    for name, j, zero in CospanMorphism(source, target, degree).blocks():
        rows, cols = zero.shape
        columns = []
        for _ in range(cols):
            column = {}
            for r in range(rows):
                v = field.coerce(int(rng.integers(-2, 3)))
                if rng.random() < 0.6 and not field.is_zero(v):
                    column[r] = v
            columns.append(column)
        parts.setdefault(name, {})[j] = SparseMatrix.from_columns(rows, field, columns)
    return CospanMorphism(source, target, degree, **parts)


def test_composition_and_differential_identities():
    """Random morphisms over F5 and Q: associativity, d o d = 0 and the Leibniz rule."""
    print("\n" + "=" * 70)
    print("TEST: morphism identities")
    print("=" * 70)

    rng = np.random.default_rng(17)
    checked = 0
    for field in (PrimeField(5), QQ):
        minus = field.neg(field.one)
        for _ in range(6):
            c, x, y, z = (random_cospan(rng, field, max_generators=8)[0] for _ in range(4))
            m, n, p = (int(d) for d in rng.integers(-1, 2, size=3))
            a = random_morphism(rng, c, x, m)
            b = random_morphism(rng, x, y, n)
            e = random_morphism(rng, y, z, p)
            assert compose(e, compose(b, a)) == compose(compose(e, b), a), "composition is associative"
            assert differential(differential(a)).is_zero(), "d o d = 0"
            sign = field.one if n % 2 == 0 else minus
            leibniz = compose(differential(b), a) + compose(b, differential(a)).scale(sign)
            assert differential(compose(b, a)) == leibniz, f"Leibniz rule fails for degrees {n}, {m}"
            checked += 1
    print(f"✓ {checked} random triples")


def test_flow_shift_is_a_monoid_action():
    """Flowing by s then t equals flowing by s + t, and by 0 changes nothing."""
    print("\n" + "=" * 70)
    print("TEST: flow shift action")
    print("=" * 70)

    rng = np.random.default_rng(23)
    shifts = [(F(1, 7), F(2, 9)), (F(1, 2), F(1, 2)), (F(1, 3), F(0))]
    for phi in (ArctanHomeomorphism(LAM), RationalHomeomorphism(LAM)):
        for _ in range(5):
            c, _ = random_cospan(rng, QQ)
            for s, t in shifts:
                assert flow_shift(flow_shift(c, s, phi), t, phi) == flow_shift(c, s + t, phi), (
                    f"{phi.kind}: {s} then {t} differs from {s + t}")
            assert flow_shift(c, 0, phi) == c
    print("✓ arctan and rational flows compose additively")


def test_flow_preserves_interleaving_distance():
    """d_int(flow(v), flow(w)) = d_int(v, w) for points of one cell."""
    print("\n" + "=" * 70)
    print("TEST: d_int flow equivariance")
    print("=" * 70)

    rng = np.random.default_rng(29)
    for phi in (RationalHomeomorphism(LAM), ArctanHomeomorphism(LAM)):
        for _ in range(30):
            k = int(rng.integers(-2, 3))
            v, w = (T(StripPoint(*(F(int(j), 8) for j in rng.integers(-15, 16, size=2)), LAM), k)
                    for _ in range(2))
            eps = F(int(rng.integers(1, 9)), 8)
            before = d_int(v, w, phi)
            after = d_int(flow_point(v, eps, phi), flow_point(w, eps, phi), phi)
            assert abs(float(after) - float(before)) <= TOL, f"{v} {w} at eps {eps} under {phi.kind}"
    print("✓ 60 pairs keep their distance")


def test_bottleneck_triangle_inequality():
    """d_B(D1, D3) <= d_B(D1, D2) + d_B(D2, D3) on random diagrams."""
    print("\n" + "=" * 70)
    print("TEST: bottleneck triangle inequality")
    print("=" * 70)

    rng = np.random.default_rng(37)
    kinds = [SummandKind.UP, SummandKind.DOWN, SummandKind.UP_INF, SummandKind.GT]
    for phi in (RationalHomeomorphism(LAM), ArctanHomeomorphism(LAM)):
        for _ in range(40):
            d1, d2, d3 = (diagram_of_summands([random_summand(rng, LAM, kind=kinds[int(rng.integers(4))],
                                                              degrees=(0,))
                                               for _ in range(int(rng.integers(0, 4)))], LAM)
                          for _ in range(3))
            d13 = bottleneck(d1, d3, phi)[0]
            bound = bottleneck(d1, d2, phi)[0] + bottleneck(d2, d3, phi)[0]
            assert d13 <= bound + TOL, f"{d13} exceeds {bound} under {phi.kind}"
    print("✓ 80 triples")


def main():
    test_standard_summands_validate()
    test_summand_parameter_checks()
    test_validation_lists_problems()
    test_direct_sum_and_conjugate()
    test_text_format_round_trip()
    test_text_format_errors_carry_lines()
    test_morphism_calculus()
    test_summand_interleavings()
    test_composition_and_differential_identities()
    test_flow_shift_is_a_monoid_action()
    test_flow_preserves_interleaving_distance()
    test_bottleneck_triangle_inequality()
    print("\n" + "=" * 70)
    print("ALL COSPAN TESTS PASSED")
    print("=" * 70)


if __name__ == "__main__":
    main()
