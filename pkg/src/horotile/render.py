"""SVG figures of H^2 windows (half-plane or disc) and E0 footprint diagrams."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping
from xml.sax.saxutils import escape

from .errors import UnsupportedDimension
from .geometry import embed_region, to_disc
from .pools import pool_analysis, pool_id
from .tiling import TileAddress, TileComplex, footprint, parent, tail_word

HALF_PLANE = "half-plane"
DISC = "disc"
MODELS = (HALF_PLANE, DISC)

DEFAULT_STYLE = {
    "width": 800.0,
    "margin": 20.0,
    "stroke": "#222222",
    "stroke_width": 1.0,
    "fill": "#f4f1e8",
    "tick": 0.15,
    "highlight_fill": "#d9822b",
    "palette": "#9ecae1,#fdae6b,#a1d99b,#bcbddc,#fc9272,#c7e9c0,#dadaeb,#fdd0a2",
    "pools": False,
    "highlight_tail": None,
    "highlight_tower": None,
}


@dataclass(frozen=True)
class Segment:
    """Straight segment or circular arc, given by endpoints and an interior point."""

    start: complex
    end: complex
    mid: complex
    arc: bool = False


@dataclass(frozen=True)
class TileOutline:
    tile: TileAddress
    c_left: Segment
    a: Segment
    c_right: Segment
    b: Segment
    b1: Segment
    b2: Segment

    def boundary(self) -> tuple[Segment, ...]:
        """The four segments of the closed outline, in drawing order."""
        return self.c_left, self.a, self.c_right, self.b


def _segment(p: complex, q: complex, model: str) -> Segment:
    m = (p + q) / 2
    if model == DISC:
        return Segment(to_disc(p), to_disc(q), to_disc(m), arc=True)
    return Segment(p, q, m)


def tile_outline(window: TileComplex, t: TileAddress, model: str = HALF_PLANE) -> TileOutline:
    """Model coordinates of a d=1 tile's edges (b1 is the lower-x half of b)."""
    if window.spec.dim != 1:
        raise UnsupportedDimension("tile outlines exist only for d=1")
    r = embed_region(window.spec, t)
    x0, x1 = float(r.box.low[0]), float(r.box.high[0])
    xm = (x0 + x1) / 2
    lo, hi = float(r.bottom), float(r.top)
    p0, p1, p2, p3 = complex(x0, lo), complex(x0, hi), complex(x1, hi), complex(x1, lo)
    pm = complex(xm, lo)
    return TileOutline(
        t,
        c_left=_segment(p0, p1, model),
        a=_segment(p1, p2, model),
        c_right=_segment(p2, p3, model),
        b=_segment(p3, p0, model),
        b1=_segment(p0, pm, model),
        b2=_segment(pm, p3, model),
    )


class _Page:
    """Affine map from model coordinates to SVG page coordinates (y down)."""

    def __init__(self, xmin, xmax, ymin, ymax, width, margin):
        span = max(xmax - xmin, ymax - ymin, 1e-12)
        self.scale = (width - 2 * margin) / span
        self.xmin, self.ymax, self.margin = xmin, ymax, margin
        self.width = width
        self.height = (ymax - ymin) * self.scale + 2 * margin

    def __call__(self, z: complex) -> tuple[float, float]:
        return ((z.real - self.xmin) * self.scale + self.margin,
                (self.ymax - z.imag) * self.scale + self.margin)


def _fmt(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _circle_through(p, q, r):
    ax, ay = p
    bx, by = q
    cx, cy = r
    det = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(det) < 1e-12:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / det
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / det
    return ux, uy, ((ax - ux) ** 2 + (ay - uy) ** 2) ** 0.5


def _draw(seg: Segment, page: _Page) -> str:
    ex, ey = page(seg.end)
    if not seg.arc:
        return f"L {_fmt(ex)} {_fmt(ey)}"
    sx, sy = page(seg.start)
    mx, my = page(seg.mid)
    circle = _circle_through((sx, sy), (mx, my), (ex, ey))
    if circle is None:
        return f"L {_fmt(ex)} {_fmt(ey)}"
    radius = circle[2]
    cross = (mx - sx) * (ey - sy) - (my - sy) * (ex - sx)
    sweep = 1 if cross > 0 else 0
    large = 1 if (sx - mx) * (ex - mx) + (sy - my) * (ey - my) > 0 else 0
    return f"A {_fmt(radius)} {_fmt(radius)} 0 {large} {sweep} {_fmt(ex)} {_fmt(ey)}"


def _parse_tile(text: str | None, d: int) -> TileAddress | None:
    if not text:
        return None
    parts = [int(p) for p in str(text).replace(":", ",").split(",") if p.strip()]
    if len(parts) != d + 1:
        raise ValueError(f"tile {text!r} must be layer plus {d} cell indices")
    return TileAddress(parts[0], tuple(parts[1:]))


def _fills(window: TileComplex, style: Mapping) -> dict[TileAddress, str]:
    spec = window.spec
    fills = {t: style["fill"] for t in window.nodes}
    if str(style["pools"]).lower() in ("1", "true", "yes") and spec.is_periodic:
        report = pool_analysis(spec)
        palette = str(style["palette"]).split(",")
        ids = sorted({pool_id(spec, t, report) for t in window.nodes})
        for t in window.nodes:
            fills[t] = palette[ids.index(pool_id(spec, t, report)) % len(palette)]
    tail_of = _parse_tile(style["highlight_tail"], spec.dim)
    if tail_of is not None:
        depth = max(0, window.layers[1] - tail_of.layer)
        for t in tail_word(spec, tail_of, depth)[0]:
            if t in window:
                fills[t] = style["highlight_fill"]
    tower_of = _parse_tile(style["highlight_tower"], spec.dim)
    if tower_of is not None:
        for t in window.nodes:
            u = t
            while u.layer < tower_of.layer:
                u = parent(spec, u).address
            if u == tower_of:
                fills[t] = style["highlight_fill"]
    return fills


def _merge_style(style: Mapping | None) -> dict:
    merged = dict(DEFAULT_STYLE)
    for key, value in (style or {}).items():
        if key not in DEFAULT_STYLE:
            raise ValueError(f"unknown style key {key!r}")
        merged[key] = value
    for key in ("width", "margin", "stroke_width", "tick"):
        merged[key] = float(merged[key])
    return merged


def _svg(width: float, height: float, body: list[str]) -> str:
    head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n')
    return head + "\n".join(body) + "\n</svg>\n"


def render_svg(window: TileComplex, model: str = HALF_PLANE, style: Mapping | None = None) -> str:
    """One closed path per tile (c, a, c, b edges) plus a tick splitting b into b1, b2."""
    if window.spec.dim != 1:
        raise UnsupportedDimension(f"render_svg draws H^2 only (d=1), got d={window.spec.dim}")
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    st = _merge_style(style)
    outlines = [tile_outline(window, t, model) for t in window.nodes]
    if model == DISC:
        page = _Page(-1.0, 1.0, -1.0, 1.0, st["width"], st["margin"])
    else:
        pts = [p for o in outlines for s in o.boundary() for p in (s.start, s.end)]
        page = _Page(min(p.real for p in pts), max(p.real for p in pts),
                     min(p.imag for p in pts), max(p.imag for p in pts), st["width"], st["margin"])
    fills = _fills(window, st)
    body = []
    if model == DISC:
        cx, cy = page(0j)
        body.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(page.scale)}" '
                    f'fill="none" stroke="#999999" stroke-width="{_fmt(st["stroke_width"])}"/>')
    for o in outlines:
        sx, sy = page(o.c_left.start)
        d = [f"M {_fmt(sx)} {_fmt(sy)}"] + [_draw(s, page) for s in o.boundary()] + ["Z"]
        layer, cell = o.tile.layer, o.tile.cell[0]
        body.append(f'<path id="t{layer}_{cell}" d="{" ".join(d)}" fill="{escape(str(fills[o.tile]))}" '
                    f'stroke="{escape(str(st["stroke"]))}" stroke-width="{_fmt(st["stroke_width"])}"/>')
    for o in outlines:
        # short inward tick where b1 meets b2
        foot = o.b1.end
        r = embed_region(window.spec, o.tile)
        x = (float(r.box.low[0]) + float(r.box.high[0])) / 2
        inner = complex(x, float(r.bottom) * (1 + st["tick"]))
        if model == DISC:
            inner = to_disc(inner)
        (x1, y1), (x2, y2) = page(foot), page(inner)
        body.append(f'<line class="tick" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                    f'stroke="{escape(str(st["stroke"]))}" stroke-width="{_fmt(st["stroke_width"])}"/>')
    return _svg(page.width, page.height, body)


def render_footprints(window: TileComplex, style: Mapping | None = None) -> str:
    """E0 projection diagram for d=2: every tile's footprint square, coarse layers on top."""
    if window.spec.dim != 2:
        raise UnsupportedDimension(f"footprint diagrams are drawn for d=2 only, got d={window.spec.dim}")
    st = _merge_style(style)
    boxes = [(t, footprint(window.spec, t)) for t in window.nodes]
    xs = [float(v) for _, b in boxes for v in (b.low[0], b.high[0])]
    ys = [float(v) for _, b in boxes for v in (b.low[1], b.high[1])]
    page = _Page(min(xs), max(xs), min(ys), max(ys), st["width"], st["margin"])
    fills = _fills(window, st)
    body = []
    j_min = window.layers[0]
    for t, b in sorted(boxes, key=lambda tb: tb[0]):
        (x0, y1), (x1, y0) = page(complex(float(b.low[0]), float(b.low[1]))), \
            page(complex(float(b.high[0]), float(b.high[1])))
        fill = fills[t] if t.layer == j_min else "none"
        width = st["stroke_width"] * (1 + t.layer - j_min)
        body.append(f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(x1 - x0)}" height="{_fmt(y1 - y0)}" '
                    f'fill="{escape(str(fill))}" stroke="{escape(str(st["stroke"]))}" '
                    f'stroke-width="{_fmt(width)}"/>')
    return _svg(page.width, page.height, body)
