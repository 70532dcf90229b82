"""Deterministic SVG rendering of layouts.

Model coordinates are exact rationals; screen positions are computed in
rationals too and only formatted at the end, so the same layout always
produces byte-identical output.  The y axis is flipped to screen
convention (model up = screen up).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .geometry import Axis, Layout, bounding_box, strips
from .represent import extract
from .serialization import coord_to_json

_STYLE = (
    "rect.box{fill:#9ecae1;fill-opacity:.55;stroke:#2b5d8c;stroke-width:1}"
    "rect.strip{fill:#fdd0a2;fill-opacity:.5;stroke:none}"
    "rect.bbox{fill:none;stroke:#888;stroke-dasharray:4 3}"
    "line.edge{stroke:#333;stroke-width:1}"
    "text.label{font:12px sans-serif;text-anchor:middle;dominant-baseline:middle}"
)


def _fmt(value: Fraction) -> str:
    text = coord_to_json(value)
    if isinstance(text, int):
        return str(text)
    if "/" in text:
        return f"{float(value):.3f}"
    return text


def render_svg(
    layout: Layout,
    *,
    show_edges: bool = False,
    strip_ids: Optional[Sequence[str]] = None,
    show_bbox: bool = False,
    scale: int = 40,
    padding: int = 20,
) -> str:
    """Render boxes plus optional sight edges, strips and bounding box.

    Edges come from extract under the layout's own mode, so asking for
    edges on an interior-violating disjoint layout raises rather than
    drawing something misleading.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    pad = Fraction(padding)
    sc = Fraction(scale)
    if not layout.rects:
        side = _fmt(2 * pad)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" '
            f'height="{side}" viewBox="0 0 {side} {side}">\n'
            f"<style>{_STYLE}</style>\n</svg>\n"
        )
    bb = bounding_box(layout)
    width = (bb.x_hi - bb.x_lo) * sc + 2 * pad
    height = (bb.y_hi - bb.y_lo) * sc + 2 * pad

    def sx(c: Fraction) -> Fraction:
        return (c - bb.x_lo) * sc + pad

    def sy(c: Fraction) -> Fraction:
        return (bb.y_hi - c) * sc + pad

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    parts.append(f"<style>{_STYLE}</style>")
    if show_bbox:
        parts.append(
            f'<rect class="bbox" x="{_fmt(sx(bb.x_lo))}" y="{_fmt(sy(bb.y_hi))}" '
            f'width="{_fmt((bb.x_hi - bb.x_lo) * sc)}" '
            f'height="{_fmt((bb.y_hi - bb.y_lo) * sc)}"/>'
        )
    if strip_ids:
        for s in strips(layout, strip_ids):
            if s.orientation is Axis.V:
                x, y = sx(s.lo), sy(bb.y_hi)
                w, h = (s.hi - s.lo) * sc, (bb.y_hi - bb.y_lo) * sc
            else:
                x, y = sx(bb.x_lo), sy(s.hi)
                w, h = (bb.x_hi - bb.x_lo) * sc, (s.hi - s.lo) * sc
            parts.append(
                f'<rect class="strip" x="{_fmt(x)}" y="{_fmt(y)}" '
                f'width="{_fmt(w)}" height="{_fmt(h)}">'
                f"<title>{s.between[0]}|{s.between[1]}</title></rect>"
            )
    for r in layout.rects:
        parts.append(
            f'<rect class="box" x="{_fmt(sx(r.x_lo))}" y="{_fmt(sy(r.y_hi))}" '
            f'width="{_fmt((r.x_hi - r.x_lo) * sc)}" '
            f'height="{_fmt((r.y_hi - r.y_lo) * sc)}"/>'
        )
    if show_edges:
        g = extract(layout)
        centers = [
            (sx((r.x_lo + r.x_hi) / 2), sy((r.y_lo + r.y_hi) / 2))
            for r in layout.rects
        ]
        for u, v in sorted(g.edges):
            (x1, y1), (x2, y2) = centers[u], centers[v]
            parts.append(
                f'<line class="edge" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
            )
    for r in layout.rects:
        cx, cy = sx((r.x_lo + r.x_hi) / 2), sy((r.y_lo + r.y_hi) / 2)
        parts.append(
            f'<text class="label" x="{_fmt(cx)}" y="{_fmt(cy)}">{r.id}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
