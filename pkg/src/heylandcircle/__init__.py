"""Heyland circle diagram construction and performance analysis.

Build the classical circle diagram of an induction machine from
no-load and blocked-rotor test data, answer steady-state performance
questions as geometric queries on it, render it as a deterministic SVG,
and cross-validate the construction against an independently fitted
equivalent circuit.
"""

from .construction import (
    HeylandDiagram,
    build_diagram,
    constant_slip_line,
    export_diagram,
    power_scale,
)
from .errors import (
    DegenerateConstruction,
    DegenerateInput,
    DiagramError,
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
from .geom import CircleShape, Line2, Point2
from .oracle import (
    GammaCircuit,
    ValidationReport,
    current_at_slip,
    fit_gamma_circuit,
    locus_deviation,
    performance_crosscheck,
    validate_report,
)
from .performance import (
    ExtremalSet,
    OperatingPoint,
    analyze_point,
    classify_regime,
    extremal_points,
    max_output_power_w,
    point_at_output,
    point_at_slip,
    sweep,
    sweep_csv,
)
from .render import RenderOptions, render_svg
from .testdata import (
    DiagramAnchors,
    MachineTestData,
    parse_test_data,
    phasor_to_point,
    refer_to_rated,
    serialize_test_data,
)

__version__ = "0.1.0"

__all__ = [
    "CircleShape",
    "DegenerateConstruction",
    "DegenerateInput",
    "DiagramAnchors",
    "DiagramError",
    "ExtremalSet",
    "GammaCircuit",
    "HeylandDiagram",
    "InfeasibleOutput",
    "InvalidSlip",
    "InvariantViolation",
    "Line2",
    "MachineTestData",
    "MalformedValue",
    "MissingKey",
    "NoIntersection",
    "NonPhysicalFit",
    "OffLocus",
    "OperatingPoint",
    "ParallelLines",
    "Point2",
    "RenderOptions",
    "UndefinedRegime",
    "ValidationReport",
    "VerticalLine",
    "ZeroAirgap",
    "analyze_point",
    "build_diagram",
    "classify_regime",
    "constant_slip_line",
    "current_at_slip",
    "export_diagram",
    "extremal_points",
    "fit_gamma_circuit",
    "locus_deviation",
    "max_output_power_w",
    "parse_test_data",
    "performance_crosscheck",
    "phasor_to_point",
    "point_at_output",
    "point_at_slip",
    "power_scale",
    "refer_to_rated",
    "render_svg",
    "serialize_test_data",
    "sweep",
    "sweep_csv",
    "validate_report",
    "__version__",
]
