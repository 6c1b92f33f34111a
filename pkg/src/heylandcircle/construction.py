"""The fixed construction sequence that produces the circle diagram.

Given the two anchor points, the center is the unique point on the
horizontal through the no-load point that is equidistant from both
anchors. The output line joins the anchors; the torque line splits the
blocked-rotor copper loss at the vertical through the blocked-rotor
point. All powers are read later as vertical gaps scaled by the power
scale computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._format import kv_block, sig
from .errors import DegenerateConstruction, InvalidSlip, ParallelLines
from .geom import (
    CircleShape,
    Line2,
    Point2,
    line_intersection,
    line_through,
    perpendicular_bisector,
)
from .testdata import DiagramAnchors, MachineTestData


@dataclass(frozen=True)
class HeylandDiagram:
    """Immutable geometric result of the construction.

    f_hz and poles are carried through from the test data so torque in
    newton-meters can be derived from the diagram alone when they were
    supplied.
    """

    anchors: DiagramAnchors
    circle: CircleShape
    ref_horizontal: Line2
    output_line: Line2
    torque_line: Line2
    power_scale_w_per_a: float
    split_point_D: Point2
    f_hz: float | None = None
    poles: int | None = None


def power_scale(data: MachineTestData) -> float:
    """Watts represented per ampere of vertical (active) component."""
    if data.phases == 3:
        return math.sqrt(3.0) * data.V_rated
    return data.V_rated


def build_diagram(anchors: DiagramAnchors, data: MachineTestData) -> HeylandDiagram:
    """Run the construction and return the assembled diagram.

    Args:
      anchors: referred anchor points from refer_to_rated.
      data: the originating test data (supplies the copper-loss split,
        phase count, and rated voltage).

    Returns:
      HeylandDiagram with center on the no-load horizontal and both
      anchors on the circle.
    """
    o = anchors.O_prime
    a = anchors.A
    ref_horizontal = Line2(o, Point2(1.0, 0.0))
    try:
        bisector = perpendicular_bisector(o, a)
        center = line_intersection(bisector, ref_horizontal)
    except ParallelLines as exc:
        raise DegenerateConstruction(str(exc)) from exc
    radius = math.hypot(center.x - o.x, center.y - o.y)
    circle = CircleShape(center, radius)
    if abs(math.hypot(a.x - center.x, a.y - center.y) - radius) > 1e-12 * radius:
        raise DegenerateConstruction(
            "blocked-rotor point failed the circle membership check"
        )

    fraction = data.rotor_cu_fraction
    if fraction == 0.0:
        split_d = Point2(a.x, a.y)
    elif fraction == 1.0:
        split_d = Point2(a.x, o.y)
    else:
        split_d = Point2(a.x, o.y + (1.0 - fraction) * (a.y - o.y))

    output_line = line_through(o, a)
    if split_d.y == o.y:
        torque_line = Line2(o, Point2(1.0, 0.0))
    else:
        torque_line = line_through(o, split_d)

    return HeylandDiagram(
        anchors=anchors,
        circle=circle,
        ref_horizontal=ref_horizontal,
        output_line=output_line,
        torque_line=torque_line,
        power_scale_w_per_a=power_scale(data),
        split_point_D=split_d,
        f_hz=data.f_hz,
        poles=data.poles,
    )


def _line_slope(line: Line2) -> float:
    return line.d.y / line.d.x


def constant_slip_line(diag: HeylandDiagram, s: float) -> Line2:
    """Line through the no-load point whose circle intersections have slip s.

    The slope interpolates between the torque-line slope (s -> inf) and
    infinity (s -> 0), passing through the output-line slope at s = 1.
    """
    if s == 0.0:
        raise InvalidSlip(s, "zero slip is the no-load point itself, not a line")
    m_out = _line_slope(diag.output_line)
    m_tq = _line_slope(diag.torque_line)
    # Direction (1, m_tq + (m_out - m_tq)/s) scaled by s, which stays
    # finite for arbitrarily small nonzero s.
    dx, dy = s, m_tq * s + (m_out - m_tq)
    if dx < 0.0:
        dx, dy = -dx, -dy
    norm = math.hypot(dx, dy)
    return Line2(diag.anchors.O_prime, Point2(dx / norm, dy / norm))


def export_diagram(diag: HeylandDiagram) -> str:
    """Flat key = value export of the constructed geometry."""
    pairs = [
        ("C_x", sig(diag.circle.center.x)),
        ("C_y", sig(diag.circle.center.y)),
        ("r", sig(diag.circle.radius)),
        ("D_x", sig(diag.split_point_D.x)),
        ("D_y", sig(diag.split_point_D.y)),
        ("power_scale_w_per_a", sig(diag.power_scale_w_per_a)),
        ("O_prime_x", sig(diag.anchors.O_prime.x)),
        ("O_prime_y", sig(diag.anchors.O_prime.y)),
        ("A_x", sig(diag.anchors.A.x)),
        ("A_y", sig(diag.anchors.A.y)),
    ]
    return kv_block(pairs)
