"""SVG drawings of families and stabbing points."""
from __future__ import annotations

from xml.sax.saxutils import escape

MARGIN = 0.10
WIDTH = 800


def _bbox(family, points):
    xs, ys = [], []
    for g in family:
        if g.kind == "disk":
            xs += [g.cx - g.r, g.cx + g.r]
            ys += [g.cy - g.r, g.cy + g.r]
    for p in points:
        xs.append(p[0])
        ys.append(p[1])
    if not xs:
        # halfplanes only: frame the boundary points nearest the origin
        for g in family:
            xs.append(g.nx * g.offset)
            ys.append(g.ny * g.offset)
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = max(x1 - x0, y1 - y0, 1e-9)
    pad = MARGIN * w
    return x0 - pad, y0 - pad, x1 + pad, y1 + pad


def clip_halfplane(h, box):
    """Polygon of ``box`` (x0, y0, x1, y1) inside the halfplane, possibly empty."""
    x0, y0, x1, y1 = box
    poly = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    out = []
    for i, a in enumerate(poly):
        b = poly[(i + 1) % len(poly)]
        fa = h.nx * a[0] + h.ny * a[1] - h.offset
        fb = h.nx * b[0] + h.ny * b[1] - h.offset
        if fa <= 0:
            out.append(a)
        if (fa < 0 < fb) or (fb < 0 < fa):
            t = fa / (fa - fb)
            out.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    return out


def render_svg(family, points=(), width: int = WIDTH) -> str:
    points = list(points)
    box = _bbox(family, points)
    x0, y0, x1, y1 = box
    scale = width / (x1 - x0)
    height = (y1 - y0) * scale

    def sx(x):
        return f"{(x - x0) * scale:.3f}"

    def sy(y):
        return f"{(y1 - y) * scale:.3f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height:.0f}" viewBox="0 0 {width} {height:.3f}">',
        "<defs><pattern id=\"hatch\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\" "
        "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" "
        "stroke=\"#4a7\" stroke-width=\"1\"/></pattern></defs>",
    ]
    for g in sorted(family, key=lambda g: g.id):
        label = escape(f"{g.kind} {g.id}")
        if g.kind == "disk":
            out.append(f'<circle cx="{sx(g.cx)}" cy="{sy(g.cy)}" r="{g.r * scale:.3f}" '
                       f'fill="none" stroke="#235" stroke-width="1"><title>{label}</title></circle>')
        else:
            poly = clip_halfplane(g, box)
            if len(poly) >= 3:
                pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in poly)
                out.append(f'<polygon points="{pts}" fill="url(#hatch)" fill-opacity="0.5" '
                           f'stroke="#4a7" stroke-width="1"><title>{label}</title></polygon>')
    arm = 6
    for p in points:
        px, py = float(sx(p[0])), float(sy(p[1]))
        out.append(f'<g stroke="#c22" stroke-width="2">'
                   f'<line x1="{px - arm:.3f}" y1="{py - arm:.3f}" x2="{px + arm:.3f}" y2="{py + arm:.3f}"/>'
                   f'<line x1="{px - arm:.3f}" y1="{py + arm:.3f}" x2="{px + arm:.3f}" y2="{py - arm:.3f}"/></g>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
