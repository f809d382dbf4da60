"""Deterministic SVG rendering of point sets, hulls and path certificates.

No plotting dependency: the viewBox is the bounding box plus a 5% margin,
the hull is dashed, a and b are bold, and the inner segments of each path
cycle through a fixed 12-color palette.
"""
from __future__ import annotations

from typing import Optional

from .geometry import PointSet, hull_points

PALETTE = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
    "#f032e6", "#bcf60c", "#008080", "#9a6324", "#800000", "#808000",
]


def _fmt(v) -> str:
    return f"{float(v):.6g}"


def render_svg(ps: PointSet, highlight_ab: Optional[tuple] = None,
               paths: Optional[list] = None, size: int = 640) -> str:
    xs = [float(p.x) for p in ps]
    ys = [float(p.y) for p in ps]
    minx, maxx, miny, maxy = min(xs), max(xs), min(ys), max(ys)
    w = max(maxx - minx, 1e-9)
    h = max(maxy - miny, 1e-9)
    mx, my = 0.05 * w, 0.05 * h
    vb = f"{_fmt(minx - mx)} {_fmt(-(maxy + my))} {_fmt(w + 2 * mx)} {_fmt(h + 2 * my)}"
    stroke = max(w, h) / 200.0

    def pt(i):
        p = ps[i]
        return f"{_fmt(p.x)},{_fmt(-p.y)}"  # flip y so up is up

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'viewBox="{vb}">',
    ]
    hull = hull_points(ps)
    hull_path = " ".join(pt(i) for i in hull)
    out.append(
        f'<polygon points="{hull_path}" fill="none" stroke="#999" '
        f'stroke-width="{_fmt(stroke)}" stroke-dasharray="{_fmt(4 * stroke)}"/>'
    )
    if paths:
        for k, path in enumerate(paths):
            color = PALETTE[k % len(PALETTE)]
            for v in path[1:-1]:
                out.append(
                    f'<line x1="{pt(v[0]).split(",")[0]}" '
                    f'y1="{pt(v[0]).split(",")[1]}" '
                    f'x2="{pt(v[1]).split(",")[0]}" '
                    f'y2="{pt(v[1]).split(",")[1]}" stroke="{color}" '
                    f'stroke-width="{_fmt(1.5 * stroke)}"/>'
                )
    if highlight_ab:
        for segm, color in zip(highlight_ab, ("#000000", "#555555")):
            out.append(
                f'<line x1="{pt(segm[0]).split(",")[0]}" '
                f'y1="{pt(segm[0]).split(",")[1]}" '
                f'x2="{pt(segm[1]).split(",")[0]}" '
                f'y2="{pt(segm[1]).split(",")[1]}" stroke="{color}" '
                f'stroke-width="{_fmt(2.5 * stroke)}"/>'
            )
    for i in range(len(ps)):
        p = ps[i]
        out.append(
            f'<circle cx="{_fmt(p.x)}" cy="{_fmt(-p.y)}" r="{_fmt(2 * stroke)}" '
            f'fill="#222"/>'
        )
        out.append(
            f'<text x="{_fmt(p.x)}" y="{_fmt(-p.y)}" dx="{_fmt(2.5 * stroke)}" '
            f'font-size="{_fmt(6 * stroke)}" fill="#333">{i}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
