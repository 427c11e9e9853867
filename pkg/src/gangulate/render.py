"""Deterministic SVG drawings of convex instances.

Vertices sit on the unit circle, v_0 at the top and the rest clockwise.  All
coordinates are printed with a fixed number of decimals so identical inputs
give byte-identical files.
"""

from __future__ import annotations

import math
from typing import Optional

from .convex import GAngulation, Instance

STYLE = """\
.boundary { stroke: #999999; stroke-width: 0.01; }
.forbidden { stroke: #d62728; stroke-width: 0.025; }
.witness { stroke: #1f77b4; stroke-width: 0.02; stroke-dasharray: 0.06 0.03; }
.vertex { fill: #000000; }
.label { font-family: sans-serif; font-size: 0.09px; text-anchor: middle; dominant-baseline: middle; }"""


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def vertex_xy(n: int, v: int, radius: float = 1.0) -> tuple[str, str]:
    """SVG coordinates of v (y grows downward)."""
    theta = math.pi / 2 - 2 * math.pi * v / n
    return _fmt(radius * math.cos(theta)), _fmt(-radius * math.sin(theta))


def _line(n: int, e, cls: str) -> str:
    (x1, y1), (x2, y2) = vertex_xy(n, e[0]), vertex_xy(n, e[1])
    return f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'


def render_svg(inst: Instance, witness: Optional[GAngulation] = None, title: Optional[str] = None) -> str:
    n = inst.n
    if witness is not None and witness.n != n:
        raise ValueError(f"witness has n={witness.n}, instance has n={n}")
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.3 -1.3 2.6 2.6" width="520" height="520">',
        f"<title>{title or f'n={n} g={inst.g}'}</title>",
        f"<style>\n{STYLE}\n</style>",
        '<g id="boundary">',
    ]
    out += [_line(n, (v, (v + 1) % n), "boundary") for v in range(n)]
    out.append("</g>")
    out.append('<g id="forbidden">')
    out += [_line(n, e, "forbidden") for e in inst.sorted_edges()]
    out.append("</g>")
    if witness is not None:
        out.append('<g id="witness">')
        out += [_line(n, d, "witness") for d in witness.sorted_diagonals()]
        out.append("</g>")
    out.append('<g id="vertices">')
    for v in range(n):
        x, y = vertex_xy(n, v)
        out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="0.025"/>')
    for v in range(n):
        x, y = vertex_xy(n, v, 1.15)
        out.append(f'<text class="label" x="{x}" y="{y}">v<tspan baseline-shift="sub" font-size="0.06px">{v}</tspan></text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
