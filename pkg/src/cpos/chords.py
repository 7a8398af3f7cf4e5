"""Midpoint cells and the chord-counting function N(x).

Every unordered pair of edges spans a parallelogram of chord midpoints; the
pair of opposite edges degenerates to a segment on the mid-parallel.  N(x)
counts chords with midpoint x, identifying chords whose endpoints lie on the
same edge pair, so each opposite-pair family counts once.  N is locally
constant away from the area evolute and jumps by exactly 2 across it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CposError
from .kernel import (
    Line,
    Segment,
    Vec,
    cross,
    line_intersect,
    lines_collinear,
    point_on_segment,
    segment_intersection,
)
from .polygon import CposPolygon


@dataclass(frozen=True)
class MidpointCell:
    i: int
    j: int
    corners: tuple[Vec, ...]   # midpoints of {P_i,P_{i+1}} x {P_j,P_{j+1}}
    degenerate: bool           # j = i+n: the cell is a segment on m(i+1/2)

    def segment(self) -> Segment:
        """Extent of a degenerate cell along its mid-parallel."""
        pts = sorted(self.corners, key=lambda v: (v.x, v.y))
        return Segment(pts[0], pts[-1])


def midpoint_cells(p: CposPolygon) -> list[MidpointCell]:
    """All n(2n-1) cells over unordered edge pairs, degenerate ones flagged."""
    m = p.size
    n = p.n
    out = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            corners = tuple(
                (p.vertex(a) + p.vertex(b)).scale(Fraction(1, 2))
                for a in (i, i + 1)
                for b in (j, j + 1)
            )
            out.append(MidpointCell(i=i, j=j, corners=corners, degenerate=(j - i) == n))
    return out


def _reflect(x: Vec, q: Vec) -> Vec:
    return Vec(2 * x.x - q.x, 2 * x.y - q.y)


def _family_overlap(p: CposPolygon, x: Vec, i: int) -> Segment | None:
    """Chord family between opposite edges i and i+n with midpoint x:
    the overlap of edge i with the reflection of edge i+n, when the two
    support lines coincide under reflection through x."""
    li = p.edge_line(i)
    lj = p.edge_line(i + p.n)
    refl = Line(_reflect(x, lj.base), -lj.dir)
    if not lines_collinear(li, refl):
        return None
    seg_i = p.edge_segment(i)
    seg_j = p.edge_segment(i + p.n)
    refl_seg = Segment(_reflect(x, seg_j.a), _reflect(x, seg_j.b))
    hit = segment_intersection(seg_i, refl_seg)
    if hit is None:
        return None
    if hit[0] == "point":
        return Segment(hit[1], hit[1])
    return hit[1]


def count_midpoint_chords(p: CposPolygon, x: Vec) -> int:
    """Number of chords with midpoint x (same-edge-pair chords identified).

    x must be strictly inside the polygon.  An isolated chord joining two
    polygon vertices (x is then a cell vertex) has no well-defined local
    family and raises OnCellVertex; vertex-vertex chords absorbed by an
    opposite-pair family are fine.
    """
    if p.contains(x) != 1:
        raise CposError("Outside", "probe point not strictly inside the polygon")
    m = p.size
    n = p.n
    families: list[tuple[int, Segment]] = []
    for i in range(1, n + 1):
        seg = _family_overlap(p, x, i)
        if seg is not None:
            families.append((i, seg))
    chords: set[tuple] = set()
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if (j - i) == n:
                continue
            li = p.edge_line(i)
            lj = p.edge_line(j)
            y1 = line_intersect(li, Line(_reflect(x, lj.base), -lj.dir))
            if y1 is None:
                continue
            y2 = _reflect(x, y1)
            if point_on_segment(y1, p.edge_segment(i)) and point_on_segment(y2, p.edge_segment(j)):
                chords.add(Segment(y1, y2).canonical())
    # drop chords absorbed by a counted opposite-pair family
    verts = {(v.x, v.y) for v in p.vertices}
    extra = 0
    for key in chords:
        a = Vec(*key[0])
        b = Vec(*key[1])
        absorbed = False
        for i, _seg in families:
            ei = p.edge_segment(i)
            ej = p.edge_segment(i + n)
            if (point_on_segment(a, ei) and point_on_segment(b, ej)) or (
                point_on_segment(b, ei) and point_on_segment(a, ej)
            ):
                absorbed = True
                break
        if absorbed:
            continue
        if key[0] in verts and key[1] in verts:
            raise CposError("OnCellVertex", "midpoint of an isolated vertex-vertex chord")
        extra += 1
    return len(families) + extra


def count_via_boundary_reflection(p: CposPolygon, x: Vec) -> int:
    """Independent oracle for generic probe points: distinct transversal
    intersections of the boundary with its reflection through x, halved.

    Raises NonGenericProbe when the configuration has overlaps or
    vertex-touching intersections (use only at arrangement-generic points).
    """
    if p.contains(x) != 1:
        raise CposError("Outside", "probe point not strictly inside the polygon")
    m = p.size
    pts: set[tuple] = set()
    verts = {(v.x, v.y) for v in p.vertices}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            si = p.edge_segment(i)
            sj = p.edge_segment(j)
            rj = Segment(_reflect(x, sj.a), _reflect(x, sj.b))
            hit = segment_intersection(si, rj)
            if hit is None:
                continue
            if hit[0] == "overlap":
                raise CposError("NonGenericProbe", "boundary overlap under reflection")
            q = hit[1]
            if (q.x, q.y) in verts or (2 * x.x - q.x, 2 * x.y - q.y) in verts:
                raise CposError("NonGenericProbe", "reflection intersection at a vertex")
            pts.add((q.x, q.y))
    if len(pts) % 2 != 0:
        raise CposError("NonGenericProbe", "odd intersection count")
    return len(pts) // 2


def _arrangement_lines(p: CposPolygon) -> list[Line]:
    """Support lines of every cell boundary plus the polygon edges."""
    lines: list[Line] = []
    seen: set[tuple] = set()

    def add(base: Vec, direction: Vec):
        if direction.is_zero():
            return
        # canonical key: primitive direction + line offset
        g = direction
        key_dir = (g.x, g.y)
        # normalize direction sign and scale via cross-offset invariant
        c = cross(g, base)
        # scale-invariant key: direction up to sign/scale, using slope form
        if g.x != 0:
            slope = g.y / g.x
            off = base.y - slope * base.x
            key = ("s", slope, off)
        else:
            key = ("v", base.x, Fraction(0))
        if key in seen:
            return
        seen.add(key)
        lines.append(Line(base, direction))

    m = p.size
    for i in range(1, m + 1):
        add(p.vertex(i), p.edge_vector(i))
    for cell in midpoint_cells(p):
        if cell.degenerate:
            seg = cell.segment()
            add(seg.a, seg.direction)
            continue
        c = cell.corners  # (i,j), (i,j+1), (i+1,j), (i+1,j+1)
        add(c[0], c[1] - c[0])
        add(c[2], c[3] - c[2])
        add(c[0], c[2] - c[0])
        add(c[1], c[3] - c[1])
    return lines


def verify_jump_law(p: CposPolygon, samples_per_edge: int = 1) -> list[dict]:
    """Straddle each area-evolute edge and assert N jumps by exactly 2.

    Sample bases sit at gaps of the exact arrangement restriction to the
    edge; the straddle offset is half the distance (in probe-line parameter)
    to the nearest other boundary line, so both probes live in faces adjacent
    across the AE edge only.
    """
    from .evolute import area_evolute

    ae = area_evolute(p)
    if ae.degenerate == "point":
        return []
    lines = _arrangement_lines(p)
    reports = []
    pts = ae.points
    k = len(pts)
    for e in range(k):
        a, b = pts[e], pts[(e + 1) % k]
        edge = Line(a, b - a)
        # transversal hits of other lines on the open edge, as parameters
        cuts = {Fraction(0), Fraction(1)}
        for ln in lines:
            if cross(ln.dir, edge.dir) == 0:
                continue
            q = line_intersect(edge, ln)
            t = (q - a).dot(edge.dir) / edge.dir.dot(edge.dir)
            if 0 < t < 1:
                cuts.add(t)
        order = sorted(cuts)
        gaps = sorted(
            ((order[i + 1] - order[i], (order[i] + order[i + 1]) / 2) for i in range(len(order) - 1)),
            reverse=True,
        )
        bases = [g[1] for g in gaps[:samples_per_edge]]
        rep = {"edge": e + 1, "pairs": [], "pass": True}
        nu = Vec(-edge.dir.y, edge.dir.x)
        for t0 in bases:
            base = edge.at(t0)
            eps = None
            probe = Line(base, nu)
            for ln in lines:
                if ln.contains(base):
                    continue
                q = line_intersect(probe, ln)
                if q is None:
                    continue
                s = (q - base).dot(nu) / nu.dot(nu)
                if s != 0 and (eps is None or abs(s) < eps):
                    eps = abs(s)
            if eps is None:
                raise CposError("NonGenericProbe", "no bounding lines around the probe")
            eps = eps / 2
            hi = count_midpoint_chords(p, base + nu.scale(eps))
            lo = count_midpoint_chords(p, base - nu.scale(eps))
            hi2 = count_midpoint_chords(p, base + nu.scale(eps / 2))
            lo2 = count_midpoint_chords(p, base - nu.scale(eps / 2))
            ok = abs(hi - lo) == 2 and hi == hi2 and lo == lo2
            rep["pairs"].append({"base_t": t0, "n_plus": hi, "n_minus": lo, "ok": ok})
            rep["pass"] = rep["pass"] and ok
        reports.append(rep)
    return reports
