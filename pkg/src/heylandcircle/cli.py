"""Command-line front end.

Commands:
  build     print the constructed-diagram export
  query     report one operating point (by output power, slip, or rated)
  sweep     CSV of operating points over a slip range
  render    write the annotated SVG diagram
  validate  cross-check the construction against the fitted circuit

Exit codes are stable contracts: 0 success, 2 input error, 3 degenerate
geometry, 4 infeasible query, 5 I/O failure, 6 validation breach.
"""

from __future__ import annotations

import argparse
import sys

from .construction import build_diagram, export_diagram
from .errors import (
    DegenerateConstruction,
    DegenerateInput,
    InfeasibleOutput,
    InvalidSlip,
    InvariantViolation,
    MalformedValue,
    MissingKey,
    NoIntersection,
    NonPhysicalFit,
    OffLocus,
    ParallelLines,
    UndefinedRegime,
    VerticalLine,
    ZeroAirgap,
)
from .oracle import validate_report
from .performance import (
    extremal_points,
    operating_point_report,
    point_at_output,
    point_at_slip,
    sweep,
    sweep_csv,
)
from .render import RenderOptions, render_svg
from .testdata import parse_test_data, refer_to_rated

_INPUT_ERRORS = (MissingKey, MalformedValue, InvariantViolation, InvalidSlip)
_DEGENERATE_ERRORS = (
    DegenerateConstruction,
    DegenerateInput,
    ParallelLines,
    VerticalLine,
    NonPhysicalFit,
)
_INFEASIBLE_ERRORS = (InfeasibleOutput, NoIntersection, ZeroAirgap, OffLocus, UndefinedRegime)


def _load_diagram(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        document = handle.read()
    data = parse_test_data(document)
    anchors = refer_to_rated(data)
    return data, build_diagram(anchors, data)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _cmd_build(args: argparse.Namespace) -> int:
    _, diag = _load_diagram(args.input)
    _emit(export_diagram(diag), args.out)
    return 0


def _cmd_query(args: argparse.Namespace) -> int:
    data, diag = _load_diagram(args.input)
    if args.at_rated:
        op = point_at_output(diag, data.P_rated_w)
    elif args.output_kw is not None:
        op = point_at_output(diag, args.output_kw * 1000.0)
    else:
        op = point_at_slip(diag, args.slip)
    _emit(operating_point_report(op), args.out)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    _, diag = _load_diagram(args.input)
    rows = sweep(diag, args.s_from, args.s_to, args.n, log_spacing=args.log)
    _emit(sweep_csv(rows), args.out)
    return 0


def _parse_slip_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of slips: {text!r}")


def _cmd_render(args: argparse.Namespace) -> int:
    _, diag = _load_diagram(args.input)
    opts = RenderOptions(
        show_full_circle=args.full_circle,
        show_slip_lines=args.slip_lines,
    )
    svg = render_svg(diag, extremal_points(diag), opts)
    with open(args.out, "wb") as handle:
        handle.write(svg.encode("utf-8"))
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    with open(args.input, "r", encoding="utf-8") as handle:
        data = parse_test_data(handle.read())
    report = validate_report(data, samples=args.samples)
    _emit(report.to_text(), args.out)
    return 0 if report.passed else 6


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heyland",
        description="Circle-diagram analysis of induction-machine test data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="print the constructed-diagram export")
    p_build.add_argument("input", help="test-data file")
    p_build.add_argument("--out", default=None, help="output file (default: stdout)")
    p_build.set_defaults(handler=_cmd_build)

    p_query = sub.add_parser("query", help="report one operating point")
    p_query.add_argument("input", help="test-data file")
    selector = p_query.add_mutually_exclusive_group(required=True)
    selector.add_argument("--output-kw", type=float, default=None,
                          help="locate the point delivering this output power")
    selector.add_argument("--slip", type=float, default=None,
                          help="locate the point at this slip")
    selector.add_argument("--at-rated", action="store_true",
                          help="locate the point delivering rated output")
    p_query.add_argument("--out", default=None, help="output file (default: stdout)")
    p_query.set_defaults(handler=_cmd_query)

    p_sweep = sub.add_parser("sweep", help="CSV sweep over a slip range")
    p_sweep.add_argument("input", help="test-data file")
    p_sweep.add_argument("--from", dest="s_from", type=float, required=True,
                         help="first slip value")
    p_sweep.add_argument("--to", dest="s_to", type=float, required=True,
                         help="last slip value")
    p_sweep.add_argument("--n", type=int, required=True, help="number of samples")
    p_sweep.add_argument("--log", action="store_true", help="logarithmic spacing")
    p_sweep.add_argument("--out", default=None, help="output file (default: stdout)")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_render = sub.add_parser("render", help="write the annotated SVG diagram")
    p_render.add_argument("input", help="test-data file")
    p_render.add_argument("--out", required=True, help="output SVG path")
    p_render.add_argument("--full-circle", action="store_true",
                          help="draw the full locus including the generating region")
    p_render.add_argument("--slip-lines", type=_parse_slip_list, default=(),
                          help="comma-separated slip values to draw as reference lines")
    p_render.set_defaults(handler=_cmd_render)

    p_validate = sub.add_parser("validate", help="cross-check against the fitted circuit")
    p_validate.add_argument("input", help="test-data file")
    p_validate.add_argument("--samples", type=int, default=200,
                            help="slip samples for the locus sweep")
    p_validate.add_argument("--out", default=None, help="output file (default: stdout)")
    p_validate.set_defaults(handler=_cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DEGENERATE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _INFEASIBLE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
