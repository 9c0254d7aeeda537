"""
Command-line front end.

    decompose  INPUT               summand list
    barcode    INPUT               level-set barcode
    diagram    INPUT               diagram points
    bottleneck A B                 distance and optimal matching
    verify     INPUT               oracle certification of the decomposition
    flow       INPUT --eps E       flowed cospan in the cospan format
    metric     X,Y X,Y             d_int and both boundary distances

INPUT is a `.scx` simplicial file or a cospan file; bottleneck also takes
diagram `.json` files. Exit status is 0 on success, 1 when verification
finds a mismatch and 2 on bad input.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, TextIO

from ..config import Config
from ..complex import parse_rational
from ..cospan import FilteredCospan, flow_shift, format_cospan, read_cospan
from ..decompose import check_conditions, decompose
from ..diagram import Diagram, barcode_of, bottleneck, diagram_of, diagram_to_json, read_diagram
from ..errors import CospanError, ParseError
from ..oracle import verify_decomposition
from ..simplicial import build_pinned_cospan, read_scx
from ..strip import INF, StripPoint, d_boundary, d_int, homeomorphism, parse_knots

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2


def format_distance(value, digits: Optional[int] = None) -> str:
    """Distances with a fixed number of significant digits; inf stays inf."""
    digits = Config.DISTANCE_DIGITS if digits is None else digits
    if value == INF:
        return "inf"
    return f"{float(value):.{digits}g}"


def load_cospan(path: str) -> FilteredCospan:
    if path.endswith(".scx"):
        return build_pinned_cospan(read_scx(path))
    return read_cospan(path)


def load_diagram(path: str) -> Diagram:
    if path.endswith(".json"):
        return read_diagram(path)
    return diagram_of(decompose(load_cospan(path)))


def parse_point(token: str, lam: Fraction) -> StripPoint:
    parts = token.split(",")
    if len(parts) != 2:
        raise ParseError(f"points are written x,y, got {token!r}")
    return StripPoint(parse_rational(parts[0].strip()), parse_rational(parts[1].strip()), lam)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cospans", description="Decompose and compare filtered cospans.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Output format")
    common.add_argument("--phi", choices=Config.PHI_KINDS, default=None,
                        help="Flow homeomorphism (default from COSPAN_PHI)")
    common.add_argument("--knots", default=None,
                        help="Knots u:t,u:t,... for --phi table (default from COSPAN_PHI_KNOTS)")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (("decompose", "List the summands"), ("barcode", "List the barcode intervals"),
                       ("diagram", "List the diagram points")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input")

    p = sub.add_parser("bottleneck", parents=[common], help="Bottleneck distance between two diagrams")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("verify", parents=[common], help="Certify a decomposition against the oracle")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--pairs", type=int, default=None)
    p.add_argument("--rectangles", type=int, default=None)
    p.add_argument("--boundary", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("flow", parents=[common], help="Flow the levels of a cospan")
    p.add_argument("input")
    p.add_argument("--eps", required=True)

    p = sub.add_parser("metric", parents=[common], help="Distances between two strip points")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--lambda", dest="lam", default=None, help="The bound (default from COSPAN_LAMBDA)")
    return parser


def _emit(out: TextIO, args, lines: List[str], payload) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _phi(args, lam):
    knots = parse_knots(args.knots) if args.knots else None
    return homeomorphism(args.phi or Config.DEFAULT_PHI, lam, knots)


def cmd_decompose(args, out: TextIO) -> int:
    d = decompose(load_cospan(args.input))
    lines = [str(s) for s in d.summands]
    _emit(out, args, lines, {"summands": lines})
    return EXIT_OK


def cmd_barcode(args, out: TextIO) -> int:
    lines = [str(i) for i in barcode_of(decompose(load_cospan(args.input)))]
    _emit(out, args, lines, {"intervals": lines})
    return EXIT_OK


def cmd_diagram(args, out: TextIO) -> int:
    dg = diagram_of(decompose(load_cospan(args.input)))
    if args.format == "json":
        out.write(diagram_to_json(dg))
    elif len(dg):
        out.write(str(dg) + "\n")
    return EXIT_OK


def cmd_bottleneck(args, out: TextIO) -> int:
    d1, d2 = load_diagram(args.first), load_diagram(args.second)
    distance, matching = bottleneck(d1, d2, _phi(args, d1.lam))
    lines = [f"distance {format_distance(distance)}"]
    if str(matching):
        lines += str(matching).splitlines()
    _emit(out, args, lines, {
        "distance": format_distance(distance),
        "pairs": [list(p) for p in matching.pairs],
        "unmatched_1": matching.unmatched_1,
        "unmatched_2": matching.unmatched_2,
    })
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    c = load_cospan(args.input)
    d = decompose(c)
    conditions = check_conditions(c, d)
    report = verify_decomposition(c, d, seed=args.seed, n_pairs=args.pairs, n_rectangles=args.rectangles,
                                  n_boundary=args.boundary, workers=args.workers)
    report.problems = conditions + report.problems
    _emit(out, args, str(report).splitlines(), {
        "passed": report.passed,
        "pairs": report.pairs,
        "rectangles": report.rectangles,
        "boundary": report.boundary,
        "problems": report.problems,
    })
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_flow(args, out: TextIO) -> int:
    c = load_cospan(args.input)
    eps = parse_rational(args.eps)
    out.write(format_cospan(flow_shift(c, eps, _phi(args, c.lam))))
    return EXIT_OK


def cmd_metric(args, out: TextIO) -> int:
    lam = parse_rational(args.lam or Config.DEFAULT_LAMBDA)
    v, w = parse_point(args.first, lam), parse_point(args.second, lam)
    phi = _phi(args, lam)
    values = {
        "d_int": format_distance(d_int(v, w, phi)),
        "d_boundary_first": format_distance(d_boundary(v, phi)),
        "d_boundary_second": format_distance(d_boundary(w, phi)),
    }
    _emit(out, args, [f"{name} {value}" for name, value in values.items()], values)
    return EXIT_OK


COMMANDS = {
    "decompose": cmd_decompose,
    "barcode": cmd_barcode,
    "diagram": cmd_diagram,
    "bottleneck": cmd_bottleneck,
    "verify": cmd_verify,
    "flow": cmd_flow,
    "metric": cmd_metric,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Run one invocation.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])
        out: Stream for results (defaults to stdout)
        err: Stream for error messages (defaults to stderr)

    Returns:
        The exit status
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out)
    except (CospanError, OSError, ValueError) as e:
        logger.debug("%s failed", args.command, exc_info=True)
        err.write(f"error: {e}\n")
        return EXIT_INPUT
