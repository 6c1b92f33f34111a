"""Minimal 2-D primitives: points, infinite lines, circles.

Lines are stored as anchor plus unit direction so every construction
line can be queried beyond its drawn extent. All tolerance decisions
go through the single relative epsilon EPS_GEOM.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInput, ParallelLines, VerticalLine

EPS_GEOM = 1e-9


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DegenerateInput(f"non-finite point ({self.x}, {self.y})")


@dataclass(frozen=True)
class Line2:
    """Infinite line through anchor p with unit direction d."""

    p: Point2
    d: Point2

    def __post_init__(self):
        norm = math.hypot(self.d.x, self.d.y)
        if abs(norm - 1.0) > 1e-12:
            raise DegenerateInput(f"line direction not unit length: |d| = {norm}")


@dataclass(frozen=True)
class CircleShape:
    center: Point2
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise DegenerateInput(f"circle radius must be positive, got {self.radius}")


def _unit(x: float, y: float) -> Point2:
    norm = math.hypot(x, y)
    if norm == 0.0:
        raise DegenerateInput("zero-length direction")
    return Point2(x / norm, y / norm)


def line_through(p: Point2, q: Point2) -> Line2:
    """Line through two distinct points, directed from p toward q."""
    if math.hypot(q.x - p.x, q.y - p.y) <= EPS_GEOM * max(
        math.hypot(p.x, p.y), math.hypot(q.x, q.y), 1.0
    ):
        raise DegenerateInput(f"points coincide: {p} and {q}")
    return Line2(p, _unit(q.x - p.x, q.y - p.y))


def perpendicular_bisector(p: Point2, q: Point2) -> Line2:
    """Line of points equidistant from p and q."""
    if math.hypot(q.x - p.x, q.y - p.y) <= EPS_GEOM * max(
        math.hypot(p.x, p.y), math.hypot(q.x, q.y), 1.0
    ):
        raise DegenerateInput(f"points coincide: {p} and {q}")
    mid = Point2(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))
    return Line2(mid, _unit(p.y - q.y, q.x - p.x))


def line_intersection(a: Line2, b: Line2) -> Point2:
    """Intersection point of two non-parallel lines."""
    cross = a.d.x * b.d.y - a.d.y * b.d.x
    if abs(cross) <= EPS_GEOM:
        raise ParallelLines(f"directions {a.d} and {b.d} are parallel")
    # Solve a.p + t*a.d = b.p + u*b.d for t.
    rx, ry = b.p.x - a.p.x, b.p.y - a.p.y
    t = (rx * b.d.y - ry * b.d.x) / cross
    return Point2(a.p.x + t * a.d.x, a.p.y + t * a.d.y)


def line_circle_intersections(l: Line2, c: CircleShape) -> tuple[Point2, ...]:
    """Intersections of a line and a circle, ordered by parameter along l.

    Tangency is declared when the discriminant magnitude falls within
    EPS_GEOM * radius**2; a single point is returned in that case.
    """
    fx, fy = c.center.x - l.p.x, c.center.y - l.p.y
    t0 = fx * l.d.x + fy * l.d.y
    foot = Point2(l.p.x + t0 * l.d.x, l.p.y + t0 * l.d.y)
    disc = c.radius**2 - ((foot.x - c.center.x) ** 2 + (foot.y - c.center.y) ** 2)
    if abs(disc) <= EPS_GEOM * c.radius**2:
        return (foot,)
    if disc < 0.0:
        return ()
    h = math.sqrt(disc)
    return (
        Point2(l.p.x + (t0 - h) * l.d.x, l.p.y + (t0 - h) * l.d.y),
        Point2(l.p.x + (t0 + h) * l.d.x, l.p.y + (t0 + h) * l.d.y),
    )


def signed_distance(p: Point2, l: Line2) -> float:
    """Perpendicular distance from p to l, positive on the left of d."""
    return l.d.x * (p.y - l.p.y) - l.d.y * (p.x - l.p.x)


def extreme_point_on_circle(c: CircleShape, l: Line2, side: str) -> Point2:
    """Point of the circle maximizing signed distance to l on the given side.

    side is "left" or "right" relative to the line direction.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    nx, ny = -l.d.y, l.d.x
    if side == "right":
        nx, ny = -nx, -ny
    return Point2(c.center.x + c.radius * nx, c.center.y + c.radius * ny)


def vertical_intercept(l: Line2, x: float) -> float:
    """Height y at which the vertical through x crosses l."""
    if abs(l.d.x) <= EPS_GEOM:
        raise VerticalLine(f"line through {l.p} is vertical")
    t = (x - l.p.x) / l.d.x
    return l.p.y + t * l.d.y
