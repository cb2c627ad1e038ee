"""SVG rendering of drawings: black filled nodes, black Bezier edges.

Output is bit-stable for fixed inputs: all coordinates are written with
exactly three decimal places.
"""

from __future__ import annotations

from .geometry import control_point
from .model import Drawing

_PRECISION = 3


def _fmt(value: float) -> str:
    return f"{value:.{_PRECISION}f}"


def render_svg(drawing: Drawing, background: str | None = "white") -> str:
    width, height = drawing.canvas
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
            f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
        ),
    ]
    if background is not None:
        lines.append(
            f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="{background}"/>'
        )
    for i in range(drawing.graph.edge_count):
        p0, p1 = drawing.edge_endpoints(i)
        curvature = drawing.curvatures[i]
        if curvature == 0.0:
            d = f"M {_fmt(p0[0])} {_fmt(p0[1])} L {_fmt(p1[0])} {_fmt(p1[1])}"
        else:
            cx, cy = control_point(p0, p1, curvature)
            d = (
                f"M {_fmt(p0[0])} {_fmt(p0[1])} Q {_fmt(cx)} {_fmt(cy)} "
                f"{_fmt(p1[0])} {_fmt(p1[1])}"
            )
        lines.append(
            f'<path d="{d}" fill="none" stroke="black" '
            f'stroke-width="{_fmt(drawing.stroke_width)}" stroke-linecap="round"/>'
        )
    for x, y in drawing.positions:
        lines.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(drawing.node_radius)}" fill="black"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
