"""Deterministic SVG rendering of scenes.

Exact rationals are converted to decimals only here, at 9 significant
digits; output element order is fixed by the feature order, so identical
requests produce identical bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .kernel import Line, Vec, rat
from .polygon import CposPolygon
from .evolute import area_evolute, central_symmetry_set
from .equidistant import equidistant, ess_trace
from .pd import choose_convex_mu, half_area_midpoints, pd_transform
from .parallels import almost_symmetry, rass, rectified_parallel
from .scene import nchords_faces

_PALETTE = ["#dbe9ff", "#ffe2c4", "#d3f2d3", "#f6d5f0", "#fff3b8", "#d9d9f3", "#c4ecf2"]

_STYLE = {
    "polygon": ("#000000", 0.03, False),
    "diagonals": ("#888888", 0.015, True),
    "midparallels": ("#bbbbbb", 0.01, True),
    "ae": ("#1f5fd0", 0.025, False),
    "css": ("#d02020", 0.025, False),
    "equidistant": ("#1d8a3c", 0.02, False),
    "ess": ("#7a1fd0", 0.03, False),
    "pd": ("#444444", 0.02, True),
    "area_parallel": ("#e07b00", 0.02, False),
    "rass": ("#7a1fd0", 0.03, False),
}


def _fmt(x: Fraction) -> str:
    return format(float(x), ".9g")


class SvgCanvas:
    """Collects primitives in world coordinates, then emits a fitted SVG."""

    def __init__(self):
        self.elements: list[str] = []
        self._xs: list[float] = []
        self._ys: list[float] = []

    def _track(self, pts):
        for q in pts:
            self._xs.append(float(q.x))
            self._ys.append(float(-q.y))

    def _coords(self, pts) -> str:
        return " ".join(f"{_fmt(q.x)},{_fmt(-q.y)}" for q in pts)

    def polyline(self, pts, color: str, width: float, dashed=False, closed=False, fill="none"):
        self._track(pts)
        tag = "polygon" if closed else "polyline"
        dash = ' stroke-dasharray="0.08 0.05"' if dashed else ""
        self.elements.append(
            f'<{tag} points="{self._coords(pts)}" fill="{fill}" stroke="{color}"'
            f' stroke-width="{width}"{dash}/>'
        )

    def dot(self, q: Vec, color: str, r: float = 0.045, filled=True):
        self._track([q])
        fill = color if filled else "none"
        self.elements.append(
            f'<circle cx="{_fmt(q.x)}" cy="{_fmt(-q.y)}" r="{r}" fill="{fill}"'
            f' stroke="{color}" stroke-width="0.015"/>'
        )

    def render(self) -> str:
        if not self._xs:
            self._xs, self._ys = [0.0, 1.0], [0.0, 1.0]
        x0, x1 = min(self._xs), max(self._xs)
        y0, y1 = min(self._ys), max(self._ys)
        pad = 0.06 * max(x1 - x0, y1 - y0, 1e-9)
        vb = f"{x0 - pad:.6g} {y0 - pad:.6g} {x1 - x0 + 2 * pad:.6g} {y1 - y0 + 2 * pad:.6g}"
        body = "\n".join(self.elements)
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{vb}" '
            'width="640" height="640">\n'
            f"{body}\n</svg>\n"
        )


def _clip_line(p: CposPolygon, line: Line) -> tuple[Vec, Vec]:
    """Extent of a line across the polygon's padded bounding box."""
    xs = [v.x for v in p.vertices]
    ys = [v.y for v in p.vertices]
    w = max(xs) - min(xs) + max(ys) - min(ys)
    d = line.dir
    scale = w / max(abs(d.x) + abs(d.y), Fraction(1))
    return line.base - d.scale(scale), line.base + d.scale(scale)


def _draw_chain(canvas: SvgCanvas, chain_doc_points, cusp_flags, color, width):
    if len(chain_doc_points) == 1:
        canvas.dot(chain_doc_points[0], color)
        return
    canvas.polyline(chain_doc_points, color, width, closed=True)
    if cusp_flags:
        for q, f in zip(chain_doc_points, cusp_flags):
            if f:
                canvas.dot(q, color)


def svg_scene(p: CposPolygon, features: list[str], params: dict) -> str:
    """Render the polygon plus the requested feature layers."""
    canvas = SvgCanvas()
    if "nchords_map" in features:
        faces = nchords_faces(p)
        values = sorted({nval for _, nval in faces})
        for region, nval in faces:
            color = _PALETTE[values.index(nval) % len(_PALETTE)]
            canvas.polyline(region, "none", 0.0, closed=True, fill=color)
    color, width, dashed = _STYLE["polygon"]
    canvas.polyline(list(p.vertices), color, width, dashed=dashed, closed=True)
    if "diagonals" in features or "ae" in features or "css" in features:
        color, width, dashed = _STYLE["diagonals"]
        for i in range(1, p.n + 1):
            canvas.polyline([p.vertex(i), p.vertex(i + p.n)], color, width, dashed=dashed)
    if "midparallels" in features:
        color, width, dashed = _STYLE["midparallels"]
        for i in range(1, p.n + 1):
            a, b = _clip_line(p, p.mid_parallel(i))
            canvas.polyline([a, b], color, width, dashed=dashed)
    if "ae" in features or "nchords_map" in features:
        ae = area_evolute(p)
        color, width, _ = _STYLE["ae"]
        _draw_chain(canvas, ae.points, ae.cusp_flags, color, width)
    if "css" in features:
        css = central_symmetry_set(p)
        color, width, _ = _STYLE["css"]
        _draw_chain(canvas, css.points, css.cusp_flags, color, width)
    if "equidistant" in features:
        t = rat(params.get("t", "1/4"))
        eq = equidistant(p, t)
        color, width, _ = _STYLE["equidistant"]
        _draw_chain(canvas, eq.points, eq.cusp_flags, color, width)
    if "ess" in features:
        color, width, _ = _STYLE["ess"]
        for br in ess_trace(p):
            for seg in br.segments:
                canvas.polyline([seg.p0, seg.p1], color, width)
            for ep in br.endpoints:
                canvas.dot(ep.point, color, filled=False)
    if "pd" in features or "n_points" in features:
        mu_param = params.get("mu")
        mu = choose_convex_mu(p) if mu_param in (None, "auto") else rat(mu_param)
        trace = pd_transform(p, mu)
        color, width, dashed = _STYLE["pd"]
        canvas.polyline(trace.vertices, color, width, dashed=dashed, closed=True)
        for q in half_area_midpoints(p):
            canvas.dot(q, "#e07b00")
    if "area_parallel" in features:
        level = rat(params.get("level", "1/4"))
        rp = rectified_parallel(p, level)
        color, width, _ = _STYLE["area_parallel"]
        for chain in rp.chains:
            _draw_chain(canvas, chain.points, chain.cusp_flags, color, width)
        # sampled points of the true hyperbola arcs (display-only approximation)
        for seg in rp.segments:
            (xa, _), (xb, _) = seg.chords
            if xa == xb:
                continue
            arc = []
            for k in range(9):
                x = xa + (xb - xa) * Fraction(k, 8)
                if x == 0:
                    continue
                arc.append(seg.frame.midpoint_of(x, seg.k / x))
            canvas.polyline(arc, "#f0b070", 0.008, dashed=True)
    if "almost_symmetry" in features:
        cert = almost_symmetry(p)
        if cert is not None:
            canvas.polyline(list(cert.q.vertices), "#2a9d8f", 0.02, dashed=True, closed=True)
            for q in cert.one_diag_midpoints:
                canvas.dot(q, "#2a9d8f", filled=False)
    if "rass" in features:
        rep = rass(p)
        color, width, _ = _STYLE["rass"]
        for br in rep["branches"]:
            for seg in br.segments:
                canvas.polyline([seg.p0, seg.p1], color, width)
            for ep in br.endpoints:
                canvas.dot(ep.point, color, filled=False)
    return canvas.render()
