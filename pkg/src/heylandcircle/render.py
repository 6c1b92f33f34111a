"""Deterministic SVG rendering of the annotated diagram.

Output is byte-reproducible: fixed element order, fixed styling, and
every coordinate formatted with exactly 3 decimal places. The diagram
is fitted into the canvas with a uniform scale, 10 percent padding on
each side of the bounding box, and the vertical axis inverted so active
current increases upward.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .construction import HeylandDiagram
from .errors import InvalidSlip, InvariantViolation, NoIntersection, ZeroAirgap
from .geom import Point2
from .performance import ExtremalSet, point_at_slip


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 2048
    height_px: int = 2048
    margin_px: int = 48
    show_full_circle: bool = True
    show_slip_lines: tuple[float, ...] = field(default_factory=tuple)
    show_labels: bool = True
    title: str = ""

    def __post_init__(self):
        if self.width_px <= 2 * self.margin_px or self.height_px <= 2 * self.margin_px:
            raise InvariantViolation("canvas must be larger than twice the margin")


def diagram_transform(diag: HeylandDiagram, opts: RenderOptions) -> tuple[float, float, float]:
    """Uniform scale and bounding-box center of the diagram-to-canvas map.

    A diagram point (x, y) maps to pixel coordinates
      px = width/2 + scale * (x - xc)
      py = height/2 - scale * (y - yc)
    which tests invert to recover geometry from the document.
    """
    c, r = diag.circle.center, diag.circle.radius
    a = diag.anchors.A
    xs = (0.0, c.x - r, c.x + r, a.x)
    low_y = c.y - r if opts.show_full_circle else diag.anchors.O_prime.y
    ys = (0.0, low_y, c.y + r, a.y)
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    padded_w = 1.2 * (xmax - xmin)
    padded_h = 1.2 * (ymax - ymin)
    scale = min(
        (opts.width_px - 2.0 * opts.margin_px) / padded_w,
        (opts.height_px - 2.0 * opts.margin_px) / padded_h,
    )
    return scale, 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)


class _Mapper:
    def __init__(self, diag: HeylandDiagram, opts: RenderOptions):
        self.scale, self.xc, self.yc = diagram_transform(diag, opts)
        self.w, self.h = opts.width_px, opts.height_px

    def px(self, p: Point2) -> tuple[float, float]:
        return (
            0.5 * self.w + self.scale * (p.x - self.xc),
            0.5 * self.h - self.scale * (p.y - self.yc),
        )


def _f(value: float) -> str:
    return f"{value:.3f}"


def _line_el(x1: float, y1: float, x2: float, y2: float, cls: str, stroke: str,
             width: float, dash: str = "") -> str:
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<line class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
        f'stroke="{stroke}" stroke-width="{_f(width)}"{dash_attr}/>'
    )


def _marker_el(x: float, y: float) -> str:
    return (
        f'<path class="marker" d="M {_f(x - 6.0)} {_f(y)} L {_f(x + 6.0)} {_f(y)} '
        f'M {_f(x)} {_f(y - 6.0)} L {_f(x)} {_f(y + 6.0)}" '
        f'stroke="#000000" stroke-width="2.000" fill="none"/>'
    )


def _text_el(x: float, y: float, content: str, anchor: str = "start",
             size: float = 28.0) -> str:
    return (
        f'<text x="{_f(x)}" y="{_f(y)}" font-family="sans-serif" '
        f'font-size="{_f(size)}" fill="#000000" text-anchor="{anchor}">'
        f"{escape(content)}</text>"
    )


def render_svg(diag: HeylandDiagram, extremals: ExtremalSet, opts: RenderOptions) -> str:
    """Produce the annotated SVG document for a constructed diagram."""
    m = _Mapper(diag, opts)
    o = diag.anchors.O_prime
    a = diag.anchors.A
    c, r = diag.circle.center, diag.circle.radius
    d = diag.split_point_D
    w, h = float(opts.width_px), float(opts.height_px)

    ox, oy = m.px(o)
    ax, ay = m.px(a)
    cx, cy = m.px(c)
    dx, dy = m.px(d)
    r_px = m.scale * r

    parts = ['<?xml version="1.0" encoding="UTF-8"?>']
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width_px}" '
        f'height="{opts.height_px}" viewBox="0 0 {opts.width_px} {opts.height_px}">'
    )
    if opts.title:
        parts.append(f"<title>{escape(opts.title)}</title>")
    parts.append(
        f'<rect class="background" x="0" y="0" width="{opts.width_px}" '
        f'height="{opts.height_px}" fill="#ffffff"/>'
    )

    origin_x, origin_y = m.px(Point2(0.0, 0.0))
    parts.append(_line_el(0.0, origin_y, w, origin_y, "axis-x", "#888888", 1.5))
    parts.append(_line_el(origin_x, 0.0, origin_x, h, "axis-y", "#888888", 1.5))
    parts.append(_line_el(0.0, oy, w, oy, "ref-horizontal", "#444444", 1.5, dash="8 6"))

    if opts.show_full_circle:
        parts.append(
            f'<circle class="locus" cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r_px)}" '
            f'stroke="#1f77b4" stroke-width="3.000" fill="none"/>'
        )
    else:
        east_x, east_y = m.px(Point2(c.x + r, c.y))
        start_x, start_y = m.px(Point2(c.x - r, c.y))
        parts.append(
            f'<path class="locus" d="M {_f(start_x)} {_f(start_y)} '
            f'A {_f(r_px)} {_f(r_px)} 0 0 1 {_f(east_x)} {_f(east_y)}" '
            f'stroke="#1f77b4" stroke-width="3.000" fill="none"/>'
        )

    parts.append(_line_el(ox, oy, ax, ay, "output-line", "#d62728", 2.0))
    parts.append(_line_el(ox, oy, dx, dy, "torque-line", "#2ca02c", 2.0))
    parts.append(_line_el(ax, ay, ax, oy, "blocked-vertical", "#9467bd", 2.0))

    for s in opts.show_slip_lines:
        try:
            far = point_at_slip(diag, s).point
        except (NoIntersection, InvalidSlip, ZeroAirgap):
            continue
        fx, fy = m.px(far)
        parts.append(_line_el(ox, oy, fx, fy, "slip-line", "#ff7f0e", 1.5, dash="4 4"))
        if opts.show_labels:
            parts.append(_text_el(fx + 10.0, fy - 10.0, f"s={s:.3f}"))

    named = ((ox, oy, "O'"), (ax, ay, "A"), (cx, cy, "C"), (dx, dy, "D"))
    for px, py, label in named:
        parts.append(_marker_el(px, py))
        if opts.show_labels:
            parts.append(_text_el(px + 10.0, py - 10.0, label))

    extremal_items = (
        (extremals.max_output.point, "max output"),
        (extremals.max_torque.point, "max torque"),
        (extremals.max_power_factor.point, "max pf"),
        (extremals.max_input.point, "max input"),
    )
    for point, label in extremal_items:
        px, py = m.px(point)
        parts.append(_marker_el(px, py))
        if opts.show_labels:
            parts.append(_text_el(px + 10.0, py - 10.0, label))

    if opts.show_full_circle and opts.show_labels:
        upper_x, upper_y = m.px(Point2(c.x, c.y + 0.55 * r))
        lower_x, lower_y = m.px(Point2(c.x, c.y - 0.55 * r))
        parts.append(_text_el(upper_x, upper_y, "motoring", anchor="middle"))
        parts.append(_text_el(lower_x, lower_y, "generating", anchor="middle"))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
