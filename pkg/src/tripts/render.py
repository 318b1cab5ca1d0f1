"""Minimal SVG drawings of point sets, graphs, matchings and empty triangles."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .geometry import PointSet, smallest_triangle

__all__ = ["render_svg"]


def render_svg(ps: PointSet, edges=(), matching=(), triangles=(), orientation="down",
               size: int = 600, margin: int = 30) -> str:
    """SVG text for ``ps`` with ``edges`` thin, ``matching`` thick, ``triangles`` shaded.

    ``triangles`` is a list of point-id pairs; each is drawn as its smallest
    triangle of the given ``orientation``.
    """
    xs = [float(p.x) for p in ps]
    ys = [float(p.y) for p in ps]
    tri_pts = []
    for p, q in triangles:
        tri_pts.append([(float(a), float(b)) for a, b in smallest_triangle(ps[p], ps[q], orientation).corners()])
    all_x = xs + [c[0] for t in tri_pts for c in t]
    all_y = ys + [c[1] for t in tri_pts for c in t]
    x0, x1 = (min(all_x), max(all_x)) if all_x else (0.0, 1.0)
    y0, y1 = (min(all_y), max(all_y)) if all_y else (0.0, 1.0)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = (size - 2 * margin) / span

    def sx(x):
        return margin + (x - x0) * scale

    def sy(y):
        return size - margin - (y - y0) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        "<!-- y axis flipped: larger y is drawn higher, so down-triangles point down -->",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for t in tri_pts:
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in t)
        out.append(f'<polygon class="triangle" points="{pts}" fill="#9ecae1" fill-opacity="0.35" stroke="#3182bd"/>')
    matched = {tuple(sorted(e)) for e in matching}
    for u, v in sorted(tuple(sorted(e)) for e in edges):
        if (u, v) in matched:
            continue
        out.append(
            f'<line class="edge" x1="{sx(xs[u]):.2f}" y1="{sy(ys[u]):.2f}" x2="{sx(xs[v]):.2f}" '
            f'y2="{sy(ys[v]):.2f}" stroke="#555" stroke-width="1"/>'
        )
    for u, v in sorted(matched):
        out.append(
            f'<line class="matching" x1="{sx(xs[u]):.2f}" y1="{sy(ys[u]):.2f}" x2="{sx(xs[v]):.2f}" '
            f'y2="{sy(ys[v]):.2f}" stroke="black" stroke-width="4"/>'
        )
    for p in ps:
        cx, cy = sx(xs[p.id]), sy(ys[p.id])
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="#d62728"/>')
        out.append(f'<text x="{cx + 6:.2f}" y="{cy - 6:.2f}" font-size="11">{escape(ps.label(p.id))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
