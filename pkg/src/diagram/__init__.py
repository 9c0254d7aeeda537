from .points import (
    Diagram,
    DiagramPoint,
    diagram_of,
    diagram_of_summands,
    format_coordinate,
    point_of_summand,
    summand_of_point,
)
from .barcode import Barcode, Interval, barcode_of, barcode_of_summands, interval_of_point, interval_of_summand
from .bottleneck import Matching, bottleneck, embedding, hemidistance, matching_cost, symmetrize
from .io import diagram_from_json, diagram_to_json, read_diagram, write_diagram

__all__ = [
    "Diagram",
    "DiagramPoint",
    "diagram_of",
    "diagram_of_summands",
    "format_coordinate",
    "point_of_summand",
    "summand_of_point",
    "Barcode",
    "Interval",
    "barcode_of",
    "barcode_of_summands",
    "interval_of_point",
    "interval_of_summand",
    "Matching",
    "bottleneck",
    "embedding",
    "hemidistance",
    "matching_cost",
    "symmetrize",
    "diagram_from_json",
    "diagram_to_json",
    "read_diagram",
    "write_diagram",
]
