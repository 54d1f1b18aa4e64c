"""DOT and SVG drawings of P(n, k) with a highlighted vertex set.

Both formats use the same concentric layout: outer vertex i sits on the
large circle and inner vertex i on the small one, both at angle 2*pi*i/n
measured counter-clockwise from the positive x axis.  Coordinates are
printed with fixed precision so output is byte-identical for equal input.
"""

from __future__ import annotations

import math

from .graph import Graph, VertexSet

__all__ = ["layout", "to_dot", "to_svg"]

OUTER_RADIUS = 200.0
INNER_RADIUS = 110.0
MARGIN = 30.0


def layout(g: Graph, outer: float = OUTER_RADIUS, inner: float = INNER_RADIUS) -> list[tuple[float, float]]:
    n = g.n
    pts = []
    for x in range(g.order):
        r = outer if x < n else inner
        theta = 2 * math.pi * (x % n) / n
        pts.append((r * math.cos(theta), r * math.sin(theta)))
    return pts


def to_dot(g: Graph, s: VertexSet | None = None) -> str:
    s = s if s is not None else g.empty_set()
    pts = layout(g, OUTER_RADIUS / 72, INNER_RADIUS / 72)  # inches for neato
    lines = [f'graph "{g.params.label()}" {{', "  node [shape=circle, width=0.3, fixedsize=true];"]
    for x in range(g.order):
        px, py = pts[x]
        attrs = f'pos="{px:.3f},{py:.3f}!"'
        if x in s:
            attrs += ", style=filled, fillcolor=black, fontcolor=white"
        lines.append(f"  {g.token(x)} [{attrs}];")
    for a, b in g.edges():
        lines.append(f"  {g.token(a)} -- {g.token(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(g: Graph, s: VertexSet | None = None) -> str:
    s = s if s is not None else g.empty_set()
    half = OUTER_RADIUS + MARGIN
    size = 2 * half
    # SVG y grows downward; flip so angles run counter-clockwise on screen.
    pts = [(half + px, half - py) for px, py in layout(g)]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
        f"<title>{g.params.label()}</title>",
        '<g stroke="#444" stroke-width="1.2">',
    ]
    for a, b in g.edges():
        (x1, y1), (x2, y2) = pts[a], pts[b]
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append("</g>")
    out.append('<g stroke="#000" stroke-width="1.2">')
    for x, (px, py) in enumerate(pts):
        fill = "#000" if x in s else "#fff"
        out.append(f'<circle id="{g.token(x)}" cx="{px:.3f}" cy="{py:.3f}" r="6" fill="{fill}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
