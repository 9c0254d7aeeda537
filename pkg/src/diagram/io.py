"""
JSON form of diagrams for the command line.

    {"lambda": "2", "points": [{"k": 0, "region": "S_interior", "x": "1", "y": "-1", "from": "GT k=0 up=-1 down=1"}]}

Coordinates are exact rationals `p/q`, or Python float reprs for points
whose levels were flowed by a transcendental homeomorphism. The `from`
field is informational; summands are recovered from the points.
"""

import json
from fractions import Fraction
from typing import Union

from ..errors import ParseError, StripError
from ..strip import Region, StripPoint
from .points import Diagram, format_coordinate


def _coordinate(token: str) -> Union[Fraction, float]:
    if any(ch in token for ch in ".eEn"):
        return float(token)
    return Fraction(token)


def diagram_to_json(d: Diagram) -> str:
    points = []
    for dp in d:
        cell = dp.point.cell
        points.append({"k": cell.k, "region": cell.region.value, "x": format_coordinate(dp.point.x),
                       "y": format_coordinate(dp.point.y), "from": str(dp.summand)})
    return json.dumps({"lambda": format_coordinate(d.lam), "points": points}, indent=2) + "\n"


def diagram_from_json(text: str) -> Diagram:
    """
    Read a diagram written by `diagram_to_json`.

    Raises:
        ParseError: On malformed JSON, bad numbers or points off the strip
    """
    try:
        data = json.loads(text)
        lam = Fraction(data["lambda"])
        points = []
        for i, rec in enumerate(data["points"]):
            x, y = _coordinate(str(rec["x"])), _coordinate(str(rec["y"]))
            p = StripPoint(x, y, lam)
            if "k" in rec and p.cell.k != int(rec["k"]):
                raise ParseError(f"point {i} lies in copy {p.cell.k}, not {rec['k']}")
            if "region" in rec and p.cell.region is not Region(rec["region"]):
                raise ParseError(f"point {i} lies in {p.cell.region.value}, not {rec['region']}")
            points.append(p)
        return Diagram.from_points(points, lam)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError, StripError) as e:
        raise ParseError(f"bad diagram: {e}") from e


def read_diagram(path: str) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return diagram_from_json(fh.read())


def write_diagram(d: Diagram, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(diagram_to_json(d))
