"""Tests for valued simplicial complexes, their text format and pinned cospans."""

import tempfile
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from src.decompose import decompose
from src.errors import ParseError, ValidationError
from src.fixtures import EXPECTED, boundary_simplicial, horn
from src.simplicial import (
    SimplicialInput,
    build_pinned_cospan,
    format_scx,
    parse_scx,
    perturb,
    read_scx,
    relabel,
    write_scx,
)
from src.strip import RationalHomeomorphism

F = Fraction
LAM = F(2)
DATA = Path(__file__).resolve().parent.parent / "src" / "fixtures" / "data"


def test_read_horn_file():
    """The bundled horn file is the horn fixture."""
    print("\n" + "=" * 70)
    print("TEST: horn file")
    print("=" * 70)

    s = read_scx(str(DATA / "horn.scx"))
    assert s == horn(), "file and fixture should agree"
    assert len(s.all_simplices) == 4 + 6 + 3
    print(f"✓ {len(s.all_simplices)} simplices")


def test_format_round_trip(tmp_path):
    """Formatting then parsing keeps values and simplices."""
    print("\n" + "=" * 70)
    print("TEST: scx round trip")
    print("=" * 70)

    for s in (horn(), boundary_simplicial("F3")):
        again = parse_scx(format_scx(s))
        assert again.values == s.values and again.field_name == s.field_name
        assert sorted(again.simplices) == sorted(x for x in s.all_simplices if len(x) > 1)
    path = tmp_path / "boundary.scx"
    write_scx(boundary_simplicial(), str(path))
    assert read_scx(str(path)).all_simplices == boundary_simplicial().all_simplices
    print("✓ round trip")


def test_parse_errors_carry_lines():
    """Each malformed input names the line at fault."""
    print("\n" + "=" * 70)
    print("TEST: scx parse errors")
    print("=" * 70)

    cases = {
        "v 0 0\n": 1,
        "lambda 0\n": 1,
        "lambda 2\nv x 0\n": 2,
        "lambda 2\nv 0 3\n": 2,
        "lambda 2\nv 0 0\nv 0 1\n": 3,
        "lambda 2\nv 0 0\ns 0 0\n": 3,
        "lambda 2\nv 0 0\nv 1 0\ns 0 1\ns 1 0\n": 5,
        "lambda 2\ns 0\n": 2,
        "lambda 2\nbogus\n": 2,
    }
    for text, line in cases.items():
        with pytest.raises(ParseError) as info:
            parse_scx(text)
        assert info.value.line == line, f"{text!r}: expected line {line}, got {info.value}"
    print(f"✓ {len(cases)} errors located")


def test_missing_face_is_reported_at_its_simplex():
    """A triangle without one of its edges fails at the triangle's line."""
    print("\n" + "=" * 70)
    print("TEST: missing face")
    print("=" * 70)

    text = "lambda 2\nv 0 0\nv 1 0\nv 2 0\ns 0 1\ns 0 1 2\n"
    with pytest.raises(ParseError) as info:
        parse_scx(text)
    assert info.value.line == 6
    assert "face 0 2 of simplex 0 1 2 is missing" in str(info.value), str(info.value)
    print(f"✓ {info.value}")


def test_pinned_cospan_of_the_horn():
    """Without pinned vertices all three complexes are the whole simplicial chain complex."""
    print("\n" + "=" * 70)
    print("TEST: pinned horn")
    print("=" * 70)

    c = build_pinned_cospan(horn())
    assert c.validate() == []
    counts = {0: 4, 1: 6, 2: 3}
    assert c.generator_counts() == {"up": counts, "down": counts, "mid": counts}
    edge = c.up.generators[1].index("0-3")
    assert c.up.levels[1][edge] == F(1), "up levels are the largest vertex value"
    assert c.down.levels[1][c.down.generators[1].index("0-3")] == F(-1), "down levels are the smallest"
    assert c.mid.homology_dim(0) == 1 and c.mid.homology_dim(1) == 0 and c.mid.homology_dim(2) == 0
    print("✓ 13 generators in each complex")


def test_pinned_vertices_are_quotiented():
    """Vertices at +-lam leave their leg and D; the result matches the matrix form."""
    print("\n" + "=" * 70)
    print("TEST: pinned boundary example")
    print("=" * 70)

    c = build_pinned_cospan(boundary_simplicial())
    assert c.generator_counts() == {
        "up": {0: 3, 1: 4, 2: 1},
        "down": {0: 3, 1: 5, 2: 1},
        "mid": {0: 3, 1: 6, 2: 1},
    }
    assert "3" not in c.up.generators[0] and "4" not in c.down.generators[0]
    assert sorted(decompose(c).summands) == sorted(EXPECTED["boundary"])
    print("✓ same summands as the matrix form")


def test_relabel_keeps_the_decomposition():
    """Renaming vertices does not change the summands."""
    print("\n" + "=" * 70)
    print("TEST: relabel")
    print("=" * 70)

    s = boundary_simplicial()
    renamed = relabel(s, {0: 4, 1: 3, 2: 2, 3: 1, 4: 0})
    assert renamed.values[1] == F(-2)
    assert sorted(decompose(build_pinned_cospan(renamed)).summands) == sorted(EXPECTED["boundary"])
    print("✓ relabelled")


def test_invalid_input_is_rejected():
    """Unknown vertices, open complexes and bad fields fail validation."""
    print("\n" + "=" * 70)
    print("TEST: invalid simplicial input")
    print("=" * 70)

    bad = [
        SimplicialInput(LAM, "Q", {0: F(0)}, [(0, 1)]),
        SimplicialInput(LAM, "Q", {0: F(0), 1: F(0), 2: F(0)}, [(0, 1), (0, 1, 2)]),
        SimplicialInput(LAM, "F4", {0: F(0)}, []),
        SimplicialInput(LAM, "Q", {0: F(3)}, []),
    ]
    for s in bad:
        assert s.validate(), f"{s} should not validate"
        with pytest.raises(ValidationError):
            build_pinned_cospan(s)
    print(f"✓ {len(bad)} inputs rejected")


def test_perturb_moves_values_within_eps():
    """Unpinned values move by at most eps in xi-coordinates; pinned ones stay."""
    print("\n" + "=" * 70)
    print("TEST: perturbation")
    print("=" * 70)

    phi = RationalHomeomorphism(LAM)
    s = boundary_simplicial()
    eps = F(1, 4)
    moved = perturb(s, eps, phi, np.random.default_rng(6))
    assert moved.values[3] == -LAM and moved.values[4] == LAM, "pinned vertices keep their values"
    for v in (0, 1, 2):
        assert abs(phi.xi(moved.values[v]) - phi.xi(s.values[v])) <= eps, f"vertex {v} moved too far"
        assert -LAM < moved.values[v] < LAM
    assert moved.simplices == s.simplices
    assert build_pinned_cospan(moved).validate() == []
    print("✓ values stay within eps")


def main():
    test_read_horn_file()
    with tempfile.TemporaryDirectory() as tmp:
        test_format_round_trip(Path(tmp))
    test_parse_errors_carry_lines()
    test_missing_face_is_reported_at_its_simplex()
    test_pinned_cospan_of_the_horn()
    test_pinned_vertices_are_quotiented()
    test_relabel_keeps_the_decomposition()
    test_invalid_input_is_rejected()
    test_perturb_moves_values_within_eps()
    print("\n" + "=" * 70)
    print("ALL SIMPLICIAL TESTS PASSED")
    print("=" * 70)


if __name__ == "__main__":
    main()
