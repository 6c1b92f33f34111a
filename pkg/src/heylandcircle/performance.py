"""Performance queries answered as geometric queries on the diagram.

Every power quantity at a locus point p is a vertical gap scaled by the
power scale k: with J the output-line intercept at p.x, K the
torque-line intercept, and L the height of the no-load horizontal,

  input    = k * p.y          output   = k * (p.y - J)
  rotor Cu = k * (J - K)      stator Cu = k * (K - L)
  air gap  = k * (p.y - K)    fixed    = k * L

and slip is the intercept ratio (J - K) / (p.y - K). The five terms
telescope, so input equals output plus all losses identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._format import kv_block, sig
from .construction import HeylandDiagram, constant_slip_line
from .errors import (
    InfeasibleOutput,
    InvalidSlip,
    InvariantViolation,
    NoIntersection,
    OffLocus,
    UndefinedRegime,
    ZeroAirgap,
)
from .geom import (
    EPS_GEOM,
    Line2,
    Point2,
    extreme_point_on_circle,
    line_circle_intersections,
    signed_distance,
    vertical_intercept,
)

CSV_HEADER = (
    "s,line_current_a,power_factor,input_w,output_w,airgap_w,"
    "rotor_cu_w,stator_cu_w,fixed_w,efficiency,regime"
)


@dataclass(frozen=True)
class OperatingPoint:
    """One steady-state condition extracted from a locus point."""

    point: Point2
    line_current_a: float
    power_factor: float
    input_power_w: float
    output_power_w: float
    airgap_power_w: float
    rotor_cu_w: float
    stator_cu_w: float
    fixed_loss_w: float
    slip: float
    efficiency: float
    regime: str
    torque_nm: float | None = None


@dataclass(frozen=True)
class ExtremalSet:
    """The four tangency/extremal operating points of a diagram."""

    max_output: OperatingPoint
    max_torque: OperatingPoint
    max_power_factor: OperatingPoint
    max_input: OperatingPoint


def classify_regime(s: float) -> str:
    """Name the operating regime for a slip value.

    Negative slip is generating, slip in (0, 1] is motoring, slip above
    1 is braking. Exactly zero slip sits on the boundary and has no
    regime.
    """
    if s == 0.0:
        raise UndefinedRegime("slip 0 is the no-load boundary")
    if s < 0.0:
        return "generating"
    if s <= 1.0:
        return "motoring"
    return "braking"


def analyze_point(diag: HeylandDiagram, p: Point2) -> OperatingPoint:
    """Extract all performance quantities at a point of the locus.

    Args:
      diag: constructed diagram.
      p: point that must lie on the circle within EPS_GEOM * radius.

    Returns:
      OperatingPoint with powers, slip, efficiency, regime, and torque
      in newton-meters when the diagram carries f_hz and poles.

    Raises:
      OffLocus: p is not on the circle.
      ZeroAirgap: the air-gap power vanishes at p (slip undefined),
        except at the no-load point itself which reports slip 0.
    """
    c = diag.circle
    if abs(math.hypot(p.x - c.center.x, p.y - c.center.y) - c.radius) > EPS_GEOM * c.radius:
        raise OffLocus(f"point ({p.x}, {p.y}) is not on the current locus")

    k = diag.power_scale_w_per_a
    j = vertical_intercept(diag.output_line, p.x)
    kk = vertical_intercept(diag.torque_line, p.x)
    fixed_height = diag.anchors.O_prime.y

    airgap_gap = p.y - kk
    rotor_gap = j - kk
    tol = EPS_GEOM * c.radius
    if abs(airgap_gap) <= tol and abs(rotor_gap) <= tol:
        # The no-load point: every intercept gap vanishes, slip is 0 by
        # continuity along the motoring arc.
        slip = 0.0
        regime = "motoring"
    elif abs(airgap_gap) <= tol:
        raise ZeroAirgap(f"air-gap power vanishes at ({p.x}, {p.y})")
    else:
        slip = rotor_gap / airgap_gap
        regime = classify_regime(slip) if slip != 0.0 else "motoring"

    input_w = k * p.y
    output_w = k * (p.y - j)
    airgap_w = k * airgap_gap
    rotor_cu_w = k * rotor_gap
    stator_cu_w = k * (kk - fixed_height)
    fixed_loss_w = k * fixed_height
    line_current = math.hypot(p.x, p.y)
    efficiency = output_w / input_w if input_w != 0.0 else math.nan

    torque_nm = None
    if diag.f_hz is not None and diag.poles is not None:
        omega_sync = 4.0 * math.pi * diag.f_hz / diag.poles
        torque_nm = airgap_w / omega_sync

    return OperatingPoint(
        point=p,
        line_current_a=line_current,
        power_factor=p.y / line_current,
        input_power_w=input_w,
        output_power_w=output_w,
        airgap_power_w=airgap_w,
        rotor_cu_w=rotor_cu_w,
        stator_cu_w=stator_cu_w,
        fixed_loss_w=fixed_loss_w,
        slip=slip,
        efficiency=efficiency,
        regime=regime,
        torque_nm=torque_nm,
    )


def max_output_power_w(diag: HeylandDiagram) -> float:
    """Feasible maximum shaft output, reached where a line parallel to
    the output line is tangent to the circle."""
    m = diag.output_line.d.y / diag.output_line.d.x
    max_gap = (signed_distance(diag.circle.center, diag.output_line)
               + diag.circle.radius) * math.sqrt(1.0 + m * m)
    return diag.power_scale_w_per_a * max_gap


def point_at_output(diag: HeylandDiagram, p_out_w: float) -> OperatingPoint:
    """Locate the stable operating point delivering the given output.

    Output power is k times the vertical gap above the output line, so
    the locus of constant output is the output line translated
    vertically by p_out_w / k. Of the two circle intersections the one
    with smaller reactive current (smaller x) is the stable branch.

    Raises:
      InfeasibleOutput: p_out_w is negative or exceeds the tangency
        maximum; the error carries the feasible maximum.
    """
    feasible_max = max_output_power_w(diag)
    if p_out_w < 0.0:
        raise InfeasibleOutput(p_out_w, feasible_max)
    o = diag.anchors.O_prime
    lifted = Line2(
        Point2(o.x, o.y + p_out_w / diag.power_scale_w_per_a),
        diag.output_line.d,
    )
    hits = line_circle_intersections(lifted, diag.circle)
    if not hits:
        raise InfeasibleOutput(p_out_w, feasible_max)
    return analyze_point(diag, hits[0])


def point_at_slip(diag: HeylandDiagram, s: float, branch: str = "upper") -> OperatingPoint:
    """Locate the locus point with the given slip.

    Intersects the constant-slip line with the circle and discards the
    intersection at the no-load point, which carries every slip value.

    Raises:
      InvalidSlip: s is zero.
      NoIntersection: the constant-slip line touches the circle only at
        the no-load point.
    """
    if branch not in ("upper", "lower"):
        raise ValueError(f"branch must be 'upper' or 'lower', got {branch!r}")
    line = constant_slip_line(diag, s)
    o = diag.anchors.O_prime
    tol = EPS_GEOM * diag.circle.radius
    hits = [
        p
        for p in line_circle_intersections(line, diag.circle)
        if math.hypot(p.x - o.x, p.y - o.y) > tol
    ]
    if not hits:
        raise NoIntersection(f"constant-slip line for s = {s} meets the locus only at no load")
    if len(hits) == 1:
        chosen = hits[0]
    else:
        chosen = max(hits, key=lambda p: p.y) if branch == "upper" else min(hits, key=lambda p: p.y)
    return analyze_point(diag, chosen)


def extremal_points(diag: HeylandDiagram) -> ExtremalSet:
    """The four classical extremal points as full operating points.

    Maximum output and maximum torque lie where chords parallel to the
    output and torque lines are tangent to the circle; maximum input is
    the topmost circle point; maximum power factor is the tangency
    point of a ray from the origin.
    """
    c = diag.circle
    p_out = extreme_point_on_circle(c, diag.output_line, "left")
    p_tq = extreme_point_on_circle(c, diag.torque_line, "left")
    p_in = Point2(c.center.x, c.center.y + c.radius)

    rho = math.hypot(c.center.x, c.center.y)
    angle = math.atan2(c.center.y, c.center.x) + math.asin(c.radius / rho)
    reach = math.sqrt(rho * rho - c.radius * c.radius)
    p_pf = Point2(reach * math.cos(angle), reach * math.sin(angle))

    return ExtremalSet(
        max_output=analyze_point(diag, p_out),
        max_torque=analyze_point(diag, p_tq),
        max_power_factor=analyze_point(diag, p_pf),
        max_input=analyze_point(diag, p_in),
    )


def sweep(
    diag: HeylandDiagram,
    s_from: float,
    s_to: float,
    n: int,
    log_spacing: bool = False,
) -> list[OperatingPoint]:
    """Evaluate operating points over a slip range, ascending.

    Samples are linearly spaced by default, logarithmically with
    log_spacing. Samples at exactly zero slip, and samples whose
    constant-slip line misses the circle, are recorded as gaps (the row
    is omitted) rather than aborting the sweep.
    """
    if n < 2:
        raise InvariantViolation("sweep requires n >= 2")
    if not s_from < s_to:
        raise InvariantViolation("sweep range must satisfy s_from < s_to")
    if log_spacing and s_from <= 0.0:
        raise InvariantViolation("log spacing requires s_from > 0")

    samples: list[float] = []
    for i in range(n):
        if i == 0:
            samples.append(s_from)
        elif i == n - 1:
            samples.append(s_to)
        elif log_spacing:
            t = i / (n - 1)
            samples.append(math.exp(math.log(s_from) * (1.0 - t) + math.log(s_to) * t))
        else:
            t = i / (n - 1)
            samples.append(s_from * (1.0 - t) + s_to * t)

    rows: list[OperatingPoint] = []
    for s in samples:
        if s == 0.0:
            continue
        try:
            rows.append(point_at_slip(diag, s))
        except (NoIntersection, ZeroAirgap):
            continue
    return rows


def sweep_csv(rows: list[OperatingPoint]) -> str:
    """Render sweep rows as CSV with 9 significant digits and LF endings."""
    lines = [CSV_HEADER]
    for op in rows:
        lines.append(
            ",".join(
                [
                    sig(op.slip),
                    sig(op.line_current_a),
                    sig(op.power_factor),
                    sig(op.input_power_w),
                    sig(op.output_power_w),
                    sig(op.airgap_power_w),
                    sig(op.rotor_cu_w),
                    sig(op.stator_cu_w),
                    sig(op.fixed_loss_w),
                    sig(op.efficiency),
                    op.regime,
                ]
            )
        )
    return "\n".join(lines) + "\n"


def operating_point_report(op: OperatingPoint) -> str:
    """Flat key = value report for a single operating point."""
    pairs = [
        ("line_current_a", sig(op.line_current_a)),
        ("power_factor", sig(op.power_factor)),
        ("slip", sig(op.slip)),
        ("input_w", sig(op.input_power_w)),
        ("output_w", sig(op.output_power_w)),
        ("airgap_w", sig(op.airgap_power_w)),
        ("efficiency", sig(op.efficiency)),
        ("regime", op.regime),
    ]
    if op.torque_nm is not None:
        pairs.append(("torque_nm", sig(op.torque_nm)))
    return kv_block(pairs)
