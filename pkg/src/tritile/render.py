"""SVG pictures of tilings, with optional overlays."""
from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .analysis import build_gamma_graph, classify_vertices
from .invariant import match_c_internal


@dataclass
class RenderStyle:
    scale: float = 40.0
    margin: float = 20.0
    stroke_width: float = 1.0
    edge_colors: dict = field(default_factory=lambda: {"a": "#1f77b4", "b": "#2ca02c",
                                                       "c": "#d62728"})
    fill_direct: str = "#fdf6e3"
    fill_mirrored: str = "#e8eef7"
    region_color: str = "#444444"
    segment_color: str = "#9467bd"
    link_color: str = "#ff7f0e"
    match_color: str = "#8c564b"
    glyphs: dict = field(default_factory=lambda: {
        "simple": None, "star": "*", "center": "o", "double_star": "**",
        "gamma_star": "g*", "double_simple": "=", "other": "?"})
    precision: int = 6


def _bounds(t):
    pts = [p for tile in t.tiles for p in tile.points]
    if t.region is not None:
        pts += list(t.region)
    if not pts:
        return 0.0, 0.0, 1.0, 1.0
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    return min(xs), min(ys), max(xs), max(ys)


def render_svg(t, style=None, *, segments=False, links=(), matching=False, vertex_types=False):
    """SVG text for ``t``: one polygon per tile, edges coloured by label.

    ``links`` lists the labels whose link graphs are drawn as arrows.  The
    region outline is drawn unless ``t`` is an open fragment.
    """
    st = style or RenderStyle()
    x0, y0, x1, y1 = _bounds(t)
    s, m, nd = st.scale, st.margin, st.precision
    width = (x1 - x0) * s + 2 * m
    height = (y1 - y0) * s + 2 * m

    def X(p):
        return round((p[0] - x0) * s + m, nd)

    def Y(p):
        return round((y1 - p[1]) * s + m, nd)

    def pts(seq):
        return " ".join(f"{X(p)},{Y(p)}" for p in seq)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{round(width, 2)}" '
           f'height="{round(height, 2)}" viewBox="0 0 {round(width, 2)} {round(height, 2)}">',
           "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
           f"<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"{st.link_color}\"/></marker></defs>"]
    out.append('<g id="tiles">')
    for tile in t.tiles:
        fill = st.fill_direct if tile.chirality == "direct" else st.fill_mirrored
        out.append(f'<polygon class="tile" data-id="{tile.id}" points="{pts(tile.points)}" '
                   f'fill="{fill}" stroke="none"/>')
    out.append("</g>")
    out.append('<g id="edges">')
    for tile in t.tiles:
        for e in tile.edges:
            out.append(f'<line x1="{X(e.start)}" y1="{Y(e.start)}" x2="{X(e.end)}" '
                       f'y2="{Y(e.end)}" stroke="{st.edge_colors[e.label]}" '
                       f'stroke-width="{st.stroke_width}"/>')
    out.append("</g>")
    if t.region is not None and not t.fragment:
        out.append(f'<polygon id="region" points="{pts(t.region)}" fill="none" '
                   f'stroke="{st.region_color}" stroke-width="{2 * st.stroke_width}"/>')
    if segments:
        out.append('<g id="segments">')
        for seg in t.segments:
            if seg.internal:
                out.append(f'<line x1="{X(seg.start)}" y1="{Y(seg.start)}" x2="{X(seg.end)}" '
                           f'y2="{Y(seg.end)}" stroke="{st.segment_color}" stroke-opacity="0.5" '
                           f'stroke-width="{3 * st.stroke_width}"/>')
        out.append("</g>")
    for lab in links:
        g = build_gamma_graph(t, lab)
        out.append(f'<g id="links-{lab}">')
        for lk in g.links:
            p, q = t.points[lk.tail], t.points[lk.head]
            out.append(f'<line x1="{X(p)}" y1="{Y(p)}" x2="{X(q)}" y2="{Y(q)}" '
                       f'stroke="{st.link_color}" stroke-width="{1.5 * st.stroke_width}" '
                       'marker-end="url(#arrow)"/>')
        out.append("</g>")
    if matching:
        out.append('<g id="matching">')
        cent = {tile.id: (sum(p[0] for p in tile.points) / 3, sum(p[1] for p in tile.points) / 3)
                for tile in t.tiles}
        for i, j in match_c_internal(t).pairs:
            p, q = cent[i], cent[j]
            out.append(f'<line x1="{X(p)}" y1="{Y(p)}" x2="{X(q)}" y2="{Y(q)}" '
                       f'stroke="{st.match_color}" stroke-dasharray="4 2"/>')
        out.append("</g>")
    if vertex_types:
        cen = classify_vertices(t, strict=False)
        out.append('<g id="vertex-types" font-size="10" font-family="sans-serif">')
        for vid, name in sorted(cen.types.items()):
            glyph = st.glyphs.get(name)
            if glyph:
                p = t.points[vid]
                out.append(f'<text x="{X(p) + 3}" y="{Y(p) - 3}">{escape(glyph)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(t, style=None, **overlays):
    """SVG document as UTF-8 bytes."""
    return render_svg(t, style, **overlays).encode("utf-8")


__all__ = ["RenderStyle", "render", "render_svg"]
