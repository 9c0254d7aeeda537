"""
Text format for cospans.

    # comment
    lambda 2
    field F5
    up
      gen 0 a 1/2
      gen 1 e 1
      d 1 0:0:1
    down
      ...
    mid
      gen 0 v
    psi_up
      m 0 0:0:1
    psi_down
      ...

`d <k>` lists the boundary from degree k to degree k-1 as col:row:scalar
triplets; `m <k>` lists a psi map in degree k the same way. Generators are
indexed per degree in order of appearance.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..algebra import Field, SparseMatrix, field_from_name
from ..complex import ChainComplex, FilteredComplex, Flavor, format_level, format_rational, parse_level
from ..errors import CospanError, ParseError
from .model import FilteredCospan

_COMPLEX_BLOCKS = ("up", "down", "mid")
_MAP_BLOCKS = ("psi_up", "psi_down")


class _Block:
    def __init__(self):
        self.gens: Dict[int, List[str]] = {}
        self.levels: Dict[int, list] = {}
        self.entries: Dict[int, List[Tuple[int, int, object, int]]] = {}


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"expected an integer, got {token!r}", line) from e


def _parse_triplet(token: str, field: Field, line: int):
    parts = token.split(":")
    if len(parts) != 3:
        raise ParseError(f"expected col:row:scalar, got {token!r}", line)
    col, row = _parse_int(parts[0], line), _parse_int(parts[1], line)
    try:
        value = field.parse(parts[2])
    except ParseError as e:
        raise ParseError(str(e), line) from e
    return col, row, value


def _matrix(entries, rows: int, cols: int, field: Field, what: str) -> SparseMatrix:
    seen = set()
    columns = [{} for _ in range(cols)]
    for col, row, value, line in entries:
        if not (0 <= col < cols and 0 <= row < rows):
            raise ParseError(f"{what} entry {col}:{row} is outside its {rows}x{cols} shape", line)
        if (col, row) in seen:
            raise ParseError(f"{what} entry {col}:{row} given twice", line)
        seen.add((col, row))
        columns[col][row] = value
    return SparseMatrix(rows, cols, field, columns)


def parse_cospan(text: str) -> FilteredCospan:
    """
    Parse the cospan text format.

    Args:
        text: File contents

    Returns:
        The FilteredCospan (not validated)

    Raises:
        ParseError: With the 1-based line number of the offending line
    """
    lam: Optional[Fraction] = None
    field: Optional[Field] = None
    blocks = {name: _Block() for name in _COMPLEX_BLOCKS + _MAP_BLOCKS}
    current: Optional[str] = None

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
            try:
                field = field_from_name(words[1])
            except ParseError as e:
                raise ParseError(str(e), n) from e
        elif head in blocks and len(words) == 1:
            current = head
        elif head == "gen":
            if current not in _COMPLEX_BLOCKS:
                raise ParseError("gen outside an up/down/mid block", n)
            want = 3 if current == "mid" else 4
            if len(words) != want:
                raise ParseError(f"gen in {current} takes {want - 1} fields", n)
            k = _parse_int(words[1], n)
            blocks[current].gens.setdefault(k, []).append(words[2])
            if current != "mid":
                if lam is None:
                    raise ParseError("lambda must precede generator levels", n)
                blocks[current].levels.setdefault(k, []).append(parse_level(words[3], lam, n))
        elif head in ("d", "m"):
            expected = _COMPLEX_BLOCKS if head == "d" else _MAP_BLOCKS
            if current not in expected:
                raise ParseError(f"'{head}' line outside a {'/'.join(expected)} block", n)
            if field is None:
                raise ParseError("field must precede matrix entries", n)
            if len(words) < 2:
                raise ParseError(f"'{head}' needs a degree", n)
            k = _parse_int(words[1], n)
            store = blocks[current].entries.setdefault(k, [])
            for token in words[2:]:
                store.append(_parse_triplet(token, field, n) + (n,))
        else:
            raise ParseError(f"unknown directive {head!r}", n)

    if lam is None:
        raise ParseError("missing lambda line")
    if field is None:
        raise ParseError("missing field line")

    try:
        complexes = {}
        for name in _COMPLEX_BLOCKS:
            b = blocks[name]
            dims = {k: len(v) for k, v in b.gens.items()}
            bds = {k: _matrix(e, dims.get(k - 1, 0), dims.get(k, 0), field, f"{name} d {k}")
                   for k, e in b.entries.items()}
            if name == "mid":
                complexes[name] = ChainComplex(field, b.gens, bds)
            else:
                flavor = Flavor.ASCENDING if name == "up" else Flavor.DESCENDING
                complexes[name] = FilteredComplex(field, flavor, lam, b.gens, b.levels, bds)
        maps = {}
        for name, src in (("psi_up", complexes["up"]), ("psi_down", complexes["down"])):
            maps[name] = {k: _matrix(e, complexes["mid"].dim(k), src.dim(k), field, f"{name} {k}")
                          for k, e in blocks[name].entries.items()}
        return FilteredCospan(complexes["up"], complexes["down"], complexes["mid"],
                              maps["psi_up"], maps["psi_down"])
    except ParseError:
        raise
    except CospanError as e:
        raise ParseError(str(e)) from e


def _triplets(m: SparseMatrix, field: Field) -> str:
    return " ".join(f"{c}:{r}:{field.format(v)}" for r, c, v in m.entries())


def format_cospan(c: FilteredCospan) -> str:
    """Write a cospan in the text format; `parse_cospan` reads it back unchanged."""
    field = c.field
    out = [f"lambda {format_rational(c.lam)}", f"field {field.name}"]
    for name in _COMPLEX_BLOCKS:
        cx = getattr(c, name)
        out.append(name)
        for k in cx.degrees:
            for i, g in enumerate(cx.generators[k]):
                if name == "mid":
                    out.append(f"  gen {k} {g}")
                else:
                    out.append(f"  gen {k} {g} {format_level(cx.levels[k][i])}")
        for k in cx.degrees:
            m = cx.boundary(k)
            if not m.is_zero():
                out.append(f"  d {k} {_triplets(m, field)}")
    for name in _MAP_BLOCKS:
        out.append(name)
        for k, m in sorted(getattr(c, name).items()):
            out.append(f"  m {k} {_triplets(m, field)}")
    return "\n".join(out) + "\n"


def read_cospan(path: str) -> FilteredCospan:
    with open(path, encoding="utf-8") as fh:
        return parse_cospan(fh.read())


def write_cospan(c: FilteredCospan, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_cospan(c))
