"""Dependency-free SVG output for verified cycles.

Coordinates are written with the y-axis flipped so the picture reads like a
phase portrait.  Output is a pure function of its inputs.
"""
from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

Point = tuple[float, float]

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2")
PANEL = 480
MARGIN = 0.05


def _fmt(v: float) -> str:
    s = f"{v:.6g}"
    return "0" if s == "-0" else s


def _bbox(polys: Sequence[Sequence[Point]]) -> tuple[float, float, float, float]:
    xs = [p[0] for poly in polys for p in poly] + [0.0]
    ys = [p[1] for poly in polys for p in poly] + [0.0]
    return min(xs), min(ys), max(xs), max(ys)


def _with_margin(box, margin: float = MARGIN):
    x0, y0, x1, y1 = box
    w, h = max(x1 - x0, 1e-12), max(y1 - y0, 1e-12)
    return x0 - margin * w, y0 - margin * h, x1 + margin * w, y1 + margin * h


def zoom_box(polys: Sequence[Sequence[Point]]) -> tuple[float, float, float, float]:
    """Square window around the origin holding the innermost cycle's crossings."""
    inner = min(polys, key=lambda poly: max(abs(c) for p in poly for c in p))
    reach = 1.5 * max(max(p[0] for p in inner), max(p[1] for p in inner))
    return -reach, -reach, reach, reach


def _panel(polys, box, x: int, title: str) -> list[str]:
    x0, y0, x1, y1 = box
    w, h = x1 - x0, y1 - y0
    out = [
        f'<svg x="{x}" y="0" width="{PANEL}" height="{PANEL}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(w)} {_fmt(h)}" preserveAspectRatio="xMidYMid meet">',
        f'<title>{escape(title)}</title>',
        f'<line x1="{_fmt(x0)}" y1="0" x2="{_fmt(x1)}" y2="0" stroke="#bbbbbb" stroke-width="1" '
        'vector-effect="non-scaling-stroke"/>',
        f'<line x1="0" y1="{_fmt(-y0)}" x2="0" y2="{_fmt(-y1)}" stroke="#bbbbbb" stroke-width="1" '
        'vector-effect="non-scaling-stroke"/>',
        # the switching set: both closed positive half-axes
        f'<polyline class="sigma" points="{_fmt(max(x1, 0))},0 0,0 0,{_fmt(-max(y1, 0))}" fill="none" '
        'stroke="#000000" stroke-width="2.5" vector-effect="non-scaling-stroke"/>',
    ]
    for k, poly in enumerate(polys):
        pts = " ".join(f"{_fmt(px)},{_fmt(-py)}" for px, py in poly)
        out.append(
            f'<polyline class="cycle" data-k="{k + 1}" points="{pts}" fill="none" '
            f'stroke="{PALETTE[k % len(PALETTE)]}" stroke-width="1.5" vector-effect="non-scaling-stroke"/>'
        )
    out.append("</svg>")
    return out


def render_svg(polys: Sequence[Sequence[Point]], title: str = "", zoom: bool = False) -> str:
    """SVG document with one closed polyline per cycle, plus a zoom panel."""
    if not polys:
        raise ValueError("nothing to render")
    main = _with_margin(_bbox(polys))
    panels = [(main, title or "cycles")]
    if zoom:
        panels.append((zoom_box(polys), (title + " zoom").strip()))
    width = PANEL * len(panels)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{PANEL}" '
        f'viewBox="0 0 {width} {PANEL}">',
        f'<rect width="{width}" height="{PANEL}" fill="#ffffff"/>',
    ]
    for i, (box, label) in enumerate(panels):
        lines += _panel(polys, box, i * PANEL, label)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
