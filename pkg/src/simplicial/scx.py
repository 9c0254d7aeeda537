"""
Text format for valued simplicial complexes.

    # the 0-horn of a tetrahedron
    lambda 2
    field Q
    v 0 1
    v 1 0
    s 0 1
    s 0 1 2

Every face of a listed simplex must be listed too; vertices count as
listed once they have a `v` line.
"""

from fractions import Fraction
from typing import Dict, List, Optional

from ..complex import Level, format_level, format_rational, parse_level
from ..errors import ParseError
from .pinned import Simplex, SimplicialInput


def _vertex_id(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"vertex ids are integers, got {token!r}", line) from e


def parse_scx(text: str) -> SimplicialInput:
    """
    Parse the simplicial text format.

    Raises:
        ParseError: With the line number of the offending line; a missing
            face is reported at the line of the simplex that needs it
    """
    lam: Optional[Fraction] = None
    field_name = "Q"
    values: Dict[int, Level] = {}
    simplices: List[Simplex] = []
    origin: Dict[Simplex, int] = {}

    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if head == "lambda":
            if len(words) != 2:
                raise ParseError("lambda takes one rational", n)
            try:
                lam = Fraction(words[1])
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"bad lambda {words[1]!r}", n) from e
            if lam <= 0:
                raise ParseError("lambda must be positive", n)
        elif head == "field":
            if len(words) != 2:
                raise ParseError("field takes one name", n)
            field_name = words[1]
        elif head == "v":
            if len(words) != 3:
                raise ParseError("v takes an id and a value", n)
            if lam is None:
                raise ParseError("lambda must precede vertex values", n)
            v = _vertex_id(words[1], n)
            if v in values:
                raise ParseError(f"vertex {v} given twice", n)
            values[v] = parse_level(words[2], lam, n)
            if not -lam <= values[v] <= lam:
                raise ParseError(f"vertex {v} value lies outside [-{lam}, {lam}]", n)
        elif head == "s":
            if len(words) < 2:
                raise ParseError("s needs at least one vertex", n)
            ids = [_vertex_id(w, n) for w in words[1:]]
            s = tuple(sorted(ids))
            if len(set(s)) != len(s):
                raise ParseError(f"simplex {s} repeats a vertex", n)
            if s in origin:
                raise ParseError(f"simplex {s} already given on line {origin[s]}", n)
            origin[s] = n
            simplices.append(s)
        else:
            raise ParseError(f"unknown directive {head!r}", n)

    if lam is None:
        raise ParseError("missing lambda line")
    result = SimplicialInput(lam, field_name, values, simplices)
    missing = result.missing_faces()
    if missing:
        s, face = missing[0]
        raise ParseError(f"face {' '.join(map(str, face))} of simplex {' '.join(map(str, s))} is missing",
                         origin.get(s))
    for s in simplices:
        unknown = [v for v in s if v not in values]
        if unknown:
            raise ParseError(f"vertex {unknown[0]} has no value", origin[s])
    problems = result.validate()
    if problems:
        raise ParseError(problems[0])
    return result


def format_scx(s: SimplicialInput) -> str:
    out = [f"lambda {format_rational(s.lam)}", f"field {s.field_name}"]
    for v in sorted(s.values):
        out.append(f"v {v} {format_level(s.values[v])}")
    for x in s.all_simplices:
        if len(x) > 1:
            out.append("s " + " ".join(map(str, x)))
    return "\n".join(out) + "\n"


def read_scx(path: str) -> SimplicialInput:
    with open(path, encoding="utf-8") as fh:
        return parse_scx(fh.read())


def write_scx(s: SimplicialInput, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_scx(s))
