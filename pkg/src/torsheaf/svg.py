"""Standalone SVG of concentric walls in the (s, t) upper half-plane."""

from __future__ import annotations

import math
from typing import Iterable

from .stability import Wall


def _f(x: float) -> str:
    return format(x, ".6g")


def render_walls(walls: Iterable[Wall], largest: Wall, title: str = "") -> str:
    """Semicircles as arc paths. The largest wall gets class "largest".

    User coordinates are s horizontally and t vertically (t = 0 at the bottom
    edge); the view spans [center - R - 1, center + R + 1] x [0, R + 1].
    """
    walls = list(walls)
    c = float(largest.center)
    R = math.sqrt(float(largest.radius_sq))
    x0, width, height = c - R - 1, 2 * R + 2, R + 1

    def y(t: float) -> float:
        return height - t

    px_w = 640
    px_h = round(px_w * height / width)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{px_w}" height="{px_h}" '
        f'viewBox="{_f(x0)} 0 {_f(width)} {_f(height)}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    style = 'fill="none" vector-effect="non-scaling-stroke"'
    out.append(
        f'<line class="s-axis" x1="{_f(x0)}" y1="{_f(y(0))}" x2="{_f(x0 + width)}" '
        f'y2="{_f(y(0))}" stroke="black" stroke-width="1" vector-effect="non-scaling-stroke"/>'
    )
    t_axis = 0.0 if x0 <= 0 <= x0 + width else x0
    out.append(
        f'<line class="t-axis" x1="{_f(t_axis)}" y1="{_f(y(0))}" x2="{_f(t_axis)}" '
        f'y2="0" stroke="gray" stroke-width="1" vector-effect="non-scaling-stroke"/>'
    )
    for w in sorted(set(walls) | {largest}, key=lambda w: -w.radius_sq):
        r = math.sqrt(float(w.radius_sq))
        cx = float(w.center)
        cls, stroke, sw = ("largest", "crimson", 2.5) if w == largest else ("wall", "steelblue", 1)
        out.append(
            f'<path class="{cls}" data-center="{_f(cx)}" data-radius="{_f(r)}" '
            f'd="M {_f(cx - r)} {_f(y(0))} A {_f(r)} {_f(r)} 0 0 1 {_f(cx + r)} {_f(y(0))}" '
            f'stroke="{stroke}" stroke-width="{sw}" {style}/>'
        )
    out.append(
        f'<circle class="center" cx="{_f(c)}" cy="{_f(y(0))}" r="{_f(width / 200)}" fill="black"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
