"""Scene layout and deterministic SVG output.

2D coordinates are fitted into the canvas by a uniform scale and a y-flip.
3D coordinates first go through a cabinet projection (receding axis at 30
degrees, half depth) and are then fitted the same way.
"""

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

from .scalar import format_scalar
from .scene import Scene, parse_scene

CABINET_ANGLE = math.radians(30)
CABINET_DEPTH = 0.5
MARGIN = 0.1  # fraction of the canvas on each side
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
AXIS_STYLE = "stroke:#888888;stroke-width:1"


def project(coords):
    """World coordinates to the drawing plane, as floats."""
    if len(coords) == 2:
        return float(coords[0]), float(coords[1])
    x, y, z = (float(c) for c in coords)
    return (
        x + CABINET_DEPTH * z * math.cos(CABINET_ANGLE),
        y + CABINET_DEPTH * z * math.sin(CABINET_ANGLE),
    )


@dataclass(frozen=True)
class Viewport:
    """svg_x = ox + scale * x, svg_y = oy - scale * y (y grows upward in the world)."""

    scale: float
    ox: float
    oy: float

    def to_svg(self, x, y):
        return self.ox + self.scale * x, self.oy - self.scale * y

    def from_svg(self, sx, sy):
        return (sx - self.ox) / self.scale, (self.oy - sy) / self.scale


@dataclass(frozen=True)
class Element:
    """One drawable item.  ``points`` are canvas coordinates."""

    tag: str  # polygon, polyline, line, circle, text
    points: tuple
    style: str = ""
    name: str = ""
    text: str = ""
    source: tuple = ()  # world coordinates behind ``points``


@dataclass
class Figure:
    width: int
    height: int
    viewport: Viewport
    elements: list = field(default_factory=list)
    comments: list = field(default_factory=list)


def _fit(points, width, height):
    xs = [p[0] for p in points] or [-1.0, 1.0]
    ys = [p[1] for p in points] or [-1.0, 1.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    if x1 - x0 == 0:
        x0, x1 = x0 - 1, x1 + 1
    if y1 - y0 == 0:
        y0, y1 = y0 - 1, y1 + 1
    inner_w, inner_h = width * (1 - 2 * MARGIN), height * (1 - 2 * MARGIN)
    scale = min(inner_w / (x1 - x0), inner_h / (y1 - y0))
    ox = width / 2 - scale * (x0 + x1) / 2
    oy = height / 2 + scale * (y0 + y1) / 2
    return Viewport(scale, ox, oy), (x0, x1, y0, y1)


def layout_project(scene: Scene, width=480, height=480, include_origin=True) -> Figure:
    names = scene.rendered_names()
    shapes = [(n, scene.objects[n]) for n in names]
    projected = [project(v.coords) for _, obj in shapes for v in obj.shape.vertices]
    if include_origin:
        projected.append((0.0, 0.0))
    vp, (x0, x1, y0, y1) = _fit(projected, width, height)
    fig = Figure(width, height, vp)

    for d, result in scene.measurements():
        fig.comments.append(f"{d.kind} {d.name} = {format_scalar(result.value)}")

    if x0 <= 0 <= x1 and y0 <= 0 <= y1:
        fig.elements.append(Element("line", (vp.to_svg(x0, 0), vp.to_svg(x1, 0)), AXIS_STYLE, "x-axis"))
        fig.elements.append(Element("line", (vp.to_svg(0, y0), vp.to_svg(0, y1)), AXIS_STYLE, "y-axis"))
        if scene.dimension == 3:
            dx, dy = project((0, 0, 1))
            # longest stretch of the receding axis that stays inside the box
            lo, hi = max(x0 / dx, y0 / dy), min(x1 / dx, y1 / dy)
            fig.elements.append(
                Element("line", (vp.to_svg(lo * dx, lo * dy), vp.to_svg(hi * dx, hi * dy)), AXIS_STYLE, "z-axis")
            )

    for k, (name, obj) in enumerate(shapes):
        color = PALETTE[k % len(PALETTE)]
        verts = obj.shape.vertices
        svg_pts = tuple(vp.to_svg(*project(v.coords)) for v in verts)
        src = tuple(v.coords for v in verts)
        if obj.kind == "polygon" and len(verts) >= 3:
            style = f"fill:{color};fill-opacity:0.15;stroke:{color};stroke-width:2"
            fig.elements.append(Element("polygon", svg_pts, style, name, source=src))
        elif obj.kind == "point" or len(verts) == 1:
            for p, s in zip(svg_pts, src):
                fig.elements.append(Element("circle", (p,), f"fill:{color}", name, source=(s,)))
        else:
            style = f"fill:none;stroke:{color};stroke-width:2"
            for i, j in obj.shape.edges:
                fig.elements.append(
                    Element("line", (svg_pts[i], svg_pts[j]), style, name, source=(src[i], src[j]))
                )
        for v, (sx, sy) in zip(verts, svg_pts):
            if v.label:
                fig.elements.append(
                    Element("text", ((sx + 4, sy - 4),), f"fill:{color};font-size:12px", name, v.label)
                )
    return fig


def _num(x):
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _pts(points):
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in points)


def emit_svg(fig: Figure) -> str:
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
        '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fig.width}" height="{fig.height}" viewBox="0 0 {fig.width} {fig.height}">',
    ]
    for c in fig.comments:
        out.append(f"<!-- {c.replace('--', '- -')} -->")
    for e in fig.elements:
        attrs = f' class={quoteattr(e.name)}' if e.name else ""
        style = f" style={quoteattr(e.style)}" if e.style else ""
        if e.tag in ("polygon", "polyline"):
            out.append(f'<{e.tag}{attrs} points="{_pts(e.points)}"{style}/>')
        elif e.tag == "line":
            (x1, y1), (x2, y2) = e.points
            out.append(
                f'<line{attrs} x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}"{style}/>'
            )
        elif e.tag == "circle":
            (x, y), = e.points
            out.append(f'<circle{attrs} cx="{_num(x)}" cy="{_num(y)}" r="3"{style}/>')
        elif e.tag == "text":
            (x, y), = e.points
            out.append(f'<text{attrs} x="{_num(x)}" y="{_num(y)}"{style}>{escape(e.text)}</text>')
        else:
            raise ValueError(f"unknown element {e.tag!r}")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_scene(text: str, **kwargs) -> str:
    """Scene text straight to SVG text."""
    return emit_svg(layout_project(parse_scene(text), **kwargs))
