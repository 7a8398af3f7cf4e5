"""Chord-area machinery, rectified area parallels, and their symmetry set.

For each non-parallel edge pair the chords joining the two edges cut off an
area that is an exact bilinear function s*x*y + c of the endpoint parameters
measured from the wedge apex, so the level-a chord-midpoint locus meets each
midpoint cell in a hyperbola arc with rational endpoints on the cell walls.
The rectified parallel replaces each arc by the segment L joining those
endpoints; chains are glued by exact endpoint equality.
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
    point_on_segment,
    rat,
    rat_str,
    segment_intersection,
    segment_param,
)
from .polygon import CposPolygon, is_symmetric
from .evolute import PolyChain, area_evolute
from .pd import area_split, choose_convex_mu, pd_transform, q_polygon
from .equidistant import equidistant, ess_trace


def chord_cut_area(p: CposPolygon, i: int, y1: Vec, j: int, y2: Vec) -> Fraction:
    """Area between the chord y2->y1 and the boundary walked ccw from y1 to y2.

    y1 must lie on edge i, y2 on edge j (closed membership)."""
    if not point_on_segment(y1, p.edge_segment(i)):
        raise CposError("NotOnEdge", "first chord endpoint off its edge", index=i)
    if not point_on_segment(y2, p.edge_segment(j)):
        raise CposError("NotOnEdge", "second chord endpoint off its edge", index=j)
    m = p.size
    steps = (j - i) % m
    if steps == 0:
        e = p.edge_segment(i)
        d = e.direction
        if (y2 - y1).dot(d) >= 0:
            return Fraction(0)  # forward sliver along one edge is flat
        steps = m
    walk = [y1] + [p.vertex(i + k) for k in range(1, steps + 1)] + [y2]
    dedup = [walk[0]]
    for q in walk[1:]:
        if q != dedup[-1]:
            dedup.append(q)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    if len(dedup) < 3:
        return Fraction(0)
    from .kernel import polygon_area

    return polygon_area(dedup)


@dataclass(frozen=True)
class WedgeFrame:
    """Exact chord-area frame for a non-parallel edge pair (i < j).

    Chord endpoints are V + x*axis_u on edge i and V + y*axis_v on edge j
    with x in [x0, x1], y in [y0, y1] (all nonnegative); the ccw cut area
    from edge i to edge j is area_scale * x * y + area_offset.
    """

    i: int
    j: int
    apex: Vec
    axis_u: Vec
    axis_v: Vec
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction
    vertex_at_x0: int
    vertex_at_x1: int
    vertex_at_y0: int
    vertex_at_y1: int
    area_scale: Fraction
    area_offset: Fraction

    def chord_point_i(self, x: Fraction) -> Vec:
        return self.apex + self.axis_u.scale(x)

    def chord_point_j(self, y: Fraction) -> Vec:
        return self.apex + self.axis_v.scale(y)

    def midpoint_of(self, x: Fraction, y: Fraction) -> Vec:
        return self.apex + self.axis_u.scale(x / 2) + self.axis_v.scale(y / 2)


def wedge_frame(p: CposPolygon, i: int, j: int) -> WedgeFrame:
    """Build the exact frame for edges i < j (non-parallel pair)."""
    m = p.size
    wi, wj = p.edge_vector(i), p.edge_vector(j)
    if cross(wi, wj) == 0:
        raise CposError("ParallelPair", "opposite edges have no wedge", index=i)
    apex = line_intersect(p.edge_line(i), p.edge_line(j))

    def edge_axis(e: int, w: Vec):
        t_lo = segment_param(Line(apex, w), p.vertex(e))
        axis = w
        v_lo, v_hi = e, e + 1
        t_hi = t_lo + 1
        if t_hi <= 0:
            axis = -w
            t_lo, t_hi = -t_hi, -t_lo
            v_lo, v_hi = e + 1, e
        elif t_lo < 0:
            raise CposError("ApexInsideEdge", "wedge apex interior to an edge", index=e)
        v_lo = (v_lo - 1) % m + 1
        v_hi = (v_hi - 1) % m + 1
        return axis, t_lo, t_hi, v_lo, v_hi

    axis_u, x0, x1, vx0, vx1 = edge_axis(i, wi)
    axis_v, y0, y1, vy0, vy1 = edge_axis(j, wj)
    # fit cut_area = s*x*y + c on two corners with distinct products
    ax = chord_cut_area(p, i, apex + axis_u.scale(x0), j, apex + axis_v.scale(y0))
    bx = chord_cut_area(p, i, apex + axis_u.scale(x1), j, apex + axis_v.scale(y1))
    if x1 * y1 == x0 * y0:
        raise CposError("DegenerateWedge", "cannot fit the area form", index=i)
    s = (bx - ax) / (x1 * y1 - x0 * y0)
    c = ax - s * x0 * y0
    # self-check on a third corner
    probe = chord_cut_area(p, i, apex + axis_u.scale(x0), j, apex + axis_v.scale(y1))
    if probe != s * x0 * y1 + c:
        raise CposError("DegenerateWedge", "area form mismatch", index=i)
    return WedgeFrame(
        i=i, j=j, apex=apex, axis_u=axis_u, axis_v=axis_v,
        x0=x0, x1=x1, y0=y0, y1=y1,
        vertex_at_x0=vx0, vertex_at_x1=vx1, vertex_at_y0=vy0, vertex_at_y1=vy1,
        area_scale=s, area_offset=c,
    )


@dataclass
class LSegment:
    """One rectified edge: the secant of a level arc inside one cell."""

    frame: WedgeFrame
    k: Fraction                 # hyperbola level x*y = k in frame coords
    ends: tuple[Vec, Vec]       # chain points (chord midpoints)
    walls: tuple[tuple, tuple]  # ("x"|"y", wall param, pencil vertex) per end
    chords: tuple[tuple, tuple]  # (x, y) chord params per end


def _arc_wall_hits(fr: WedgeFrame, k: Fraction):
    hits: dict[tuple, tuple] = {}

    def consider(x: Fraction, y: Fraction, wall):
        if fr.x0 <= x <= fr.x1 and fr.y0 <= y <= fr.y1:
            key = (x, y)
            if key not in hits:
                hits[key] = (x, y, wall)

    if k <= 0:
        return []
    if fr.x0 > 0:
        consider(fr.x0, k / fr.x0, ("x", fr.x0, fr.vertex_at_x0))
    if fr.x1 > 0:
        consider(fr.x1, k / fr.x1, ("x", fr.x1, fr.vertex_at_x1))
    if fr.y0 > 0:
        consider(k / fr.y0, fr.y0, ("y", fr.y0, fr.vertex_at_y0))
    if fr.y1 > 0:
        consider(k / fr.y1, fr.y1, ("y", fr.y1, fr.vertex_at_y1))
    return list(hits.values())


@dataclass
class RectifiedParallel:
    level: Fraction
    chains: list[PolyChain]
    on_ae: list[list[bool]]       # per chain vertex: exact AE membership
    segments: list[LSegment]

    def to_json(self) -> dict:
        return {
            "level": rat_str(self.level),
            "components": len(self.chains),
            "chains": [c.to_json() for c in self.chains],
        }


def _level_segments(p: CposPolygon, a: Fraction) -> list[LSegment]:
    total = p.area()
    m = p.size
    n = p.n
    segs: list[LSegment] = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if (j - i) == n:
                continue
            fr = wedge_frame(p, i, j)
            ks = []
            for target in (a, total - a):
                if fr.area_scale == 0:
                    raise CposError("DegenerateWedge", "flat area form", index=i)
                ks.append((target - fr.area_offset) / fr.area_scale)
            for k in sorted(set(ks)):
                hits = _arc_wall_hits(fr, k)
                if len(hits) < 2:
                    continue
                if len(hits) > 2:
                    raise CposError("NonGenericTangency",
                                    f"{len(hits)} wall hits in one cell", index=i)
                (xa, ya, wa), (xb, yb, wb) = hits
                pa = fr.midpoint_of(xa, ya)
                pb = fr.midpoint_of(xb, yb)
                if pa == pb:
                    continue  # grazing corner contact
                segs.append(LSegment(frame=fr, k=k, ends=(pa, pb),
                                     walls=(wa, wb), chords=((xa, ya), (xb, yb))))
    return segs


def _glue_chains(p: CposPolygon, segs: list[LSegment]):
    index: dict[tuple, list[tuple[int, int]]] = {}
    for si, seg in enumerate(segs):
        for e in (0, 1):
            index.setdefault((seg.ends[e].x, seg.ends[e].y), []).append((si, e))
    for key, inc in index.items():
        if len(inc) != 2:
            raise CposError("NonGenericTangency",
                            f"chain point with degree {len(inc)}")
    visited = [False] * len(segs)
    chains = []
    for start in range(len(segs)):
        if visited[start]:
            continue
        pts: list[Vec] = []
        si, e = start, 0
        while True:
            visited[si] = True
            pts.append(segs[si].ends[e])
            far = segs[si].ends[1 - e]
            inc = index[(far.x, far.y)]
            nxt = [(sj, ej) for sj, ej in inc if sj != si]
            if not nxt:
                raise CposError("NonGenericTangency", "open rectified chain")
            si, e = nxt[0]
            if si == start and e == 0:
                break
        chains.append(pts)
    return chains


def rectified_parallel(p: CposPolygon, a) -> RectifiedParallel:
    """Closed rectified chain(s) at area level a, 0 < a <= total/2.

    A chain vertex on a mid-parallel band is a cusp exactly when both
    incident segments continue on the same side of the band; vertex flags are
    computed from that side test, with AE membership reported alongside for
    the biconditional cross-check.
    """
    a = rat(a)
    total = p.area()
    if not (0 < a <= total / 2):
        raise CposError("LevelOutOfRange", "need 0 < level <= half the total area")
    segs = _level_segments(p, a)
    if not segs:
        raise CposError("LevelOutOfRange", "no chords attain this level")
    chains = _glue_chains(p, segs)
    mid_lines = [p.mid_parallel(i) for i in range(1, p.n + 1)]
    ae = area_evolute(p)
    ae_edges = []
    if ae.degenerate == "point":
        ae_edges = [Segment(ae.points[0], ae.points[0])]
    else:
        pts = ae.points
        ae_edges = [Segment(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts))]
    out_chains: list[PolyChain] = []
    out_on_ae: list[list[bool]] = []
    for pts in chains:
        flags: list[bool] = []
        members: list[bool] = []
        L = len(pts)
        for k in range(L):
            v = pts[k]
            prev_pt = pts[(k - 1) % L]
            next_pt = pts[(k + 1) % L]
            cusp = False
            bands = [ln for ln in mid_lines if ln.contains(v)]
            verdicts = set()
            for ln in bands:
                sa = ln.side_of(prev_pt)
                sb = ln.side_of(next_pt)
                if sa == 0 or sb == 0:
                    # a chain edge runs along the band: the continuation side
                    # is undefined (the level where the chain meets the area
                    # evolute at a vertex)
                    raise CposError("NonGenericTangency",
                                    "rectified chain runs along a mid-parallel")
                verdicts.add(sa == sb)
            if len(verdicts) > 1:
                raise CposError("NonGenericTangency", "conflicting band verdicts at a vertex")
            if verdicts:
                cusp = verdicts.pop()
            flags.append(cusp)
            members.append(any(point_on_segment(v, e) or (e.a == e.b == v) for e in ae_edges))
        out_chains.append(PolyChain(points=pts, closed=True, cusp_flags=flags))
        out_on_ae.append(members)
    return RectifiedParallel(level=a, chains=out_chains, on_ae=out_on_ae, segments=segs)


def classify_L_segment(p: CposPolygon, i: int, j: int, a) -> list[dict]:
    """Wall-pair regimes of the level-a segments in cell (i, j), each with its
    exact geometric property asserted.

    Regimes: through_edge_midpoint (support line passes through the midpoint
    of the pivot edge), parallel_cross_diagonal_1 (parallel to P_i P_{j+1}),
    parallel_cross_diagonal_2 (parallel to P_{i+1} P_j), and the
    corner-cut configurations outside the three-case analysis
    (parallel_corner, still parallel to the pencil chord P_u P_v).
    """
    a = rat(a)
    total = p.area()
    fr = wedge_frame(p, i, j)
    out = []
    for target in sorted({a, total - a}):
        k = (target - fr.area_offset) / fr.area_scale
        hits = _arc_wall_hits(fr, k)
        if len(hits) != 2:
            continue
        (xa, ya, wa), (xb, yb, wb) = hits
        seg = Segment(fr.midpoint_of(xa, ya), fr.midpoint_of(xb, yb))
        d = seg.direction
        rec: dict = {"cell": (i, j), "k": k}
        kinds = (wa[0], wb[0])
        if kinds in (("x", "x"), ("y", "y")):
            edge = i if kinds[0] == "x" else j
            e_mid = (p.vertex(edge) + p.vertex(edge + 1)).scale(Fraction(1, 2))
            rec["regime"] = "through_edge_midpoint"
            rec["edge"] = edge
            rec["primary_regime"] = kinds[0] == "x"
            rec["property_ok"] = cross(d, e_mid - seg.a) == 0
        else:
            (wx, wy) = (wa, wb) if wa[0] == "x" else (wb, wa)
            u, v = wx[2], wy[2]
            chord = p.vertex(v) - p.vertex(u)
            rec["pencil_vertices"] = (u, v)
            du = (v - u) % p.size
            if u == (i - 1) % p.size + 1 and v == (j + 1 - 1) % p.size + 1:
                rec["regime"] = "parallel_cross_diagonal_1"
                rec["primary_regime"] = True
            elif u == (i + 1 - 1) % p.size + 1 and v == (j - 1) % p.size + 1:
                rec["regime"] = "parallel_cross_diagonal_2"
                rec["primary_regime"] = True
            else:
                rec["regime"] = "parallel_corner"
                rec["primary_regime"] = False
            rec["is_great_diagonal"] = du == p.n
            rec["property_ok"] = cross(d, chord) == 0
        out.append(rec)
    return out


@dataclass
class AlmostSymmetryCertificate:
    mu0: Fraction
    q: CposPolygon
    ae_inside: bool
    one_diag_midpoints_outside: bool
    one_diag_midpoints: list[Vec]

    @property
    def valid(self) -> bool:
        return self.ae_inside and self.one_diag_midpoints_outside

    def to_json(self) -> dict:
        return {
            "mu0": rat_str(self.mu0),
            "q": {"vertices": [v.to_json() for v in self.q.vertices]},
            "ae_inside": self.ae_inside,
            "one_diag_midpoints_outside": self.one_diag_midpoints_outside,
            "one_diag_midpoints": [v.to_json() for v in self.one_diag_midpoints],
        }


def one_diagonal_midpoints(p: CposPolygon) -> list[Vec]:
    """Midpoints of the 2n chords P_i P_{i+n+1}."""
    n = p.n
    return [
        (p.vertex(i) + p.vertex(i + n + 1)).scale(Fraction(1, 2))
        for i in range(1, 2 * n + 1)
    ]


def _certificate_at(p: CposPolygon, ae_pts: list[Vec], diag_mids: list[Vec], mu: Fraction):
    try:
        q = q_polygon(pd_transform(p, mu))
    except CposError:
        return None
    ae_inside = all(q.contains(v) == 1 for v in ae_pts)
    mids_outside = all(q.contains(v) == -1 for v in diag_mids)
    if ae_inside and mids_outside:
        return AlmostSymmetryCertificate(
            mu0=mu, q=q, ae_inside=True, one_diag_midpoints_outside=True,
            one_diag_midpoints=diag_mids,
        )
    return None


def almost_symmetry(p: CposPolygon) -> AlmostSymmetryCertificate | None:
    """Search the mu window between the convexity/containment threshold and
    the first mu placing a 1-diagonal midpoint inside the transform."""
    if is_symmetric(p) is not None:
        raise CposError("SymmetricInput", "transform undefined for symmetric polygons")
    ae_pts = area_evolute(p).points
    diag_mids = one_diagonal_midpoints(p)

    def cond1(mu: Fraction) -> bool:
        try:
            q = q_polygon(pd_transform(p, mu))
        except CposError:
            return False
        return all(q.contains(v) == 1 for v in ae_pts)

    def some_mid_inside(mu: Fraction) -> bool:
        try:
            q = q_polygon(pd_transform(p, mu))
        except CposError:
            return False
        return any(q.contains(v) >= 0 for v in diag_mids)

    mu_c = choose_convex_mu(p)
    # refine the lower threshold of condition 1 by bisection
    lo, hi = mu_c / 2, mu_c
    for _ in range(32):
        if not cond1(lo):
            break
        lo, hi = lo / 2, lo
    for _ in range(24):
        mid = (lo + hi) / 2
        if cond1(mid):
            hi = mid
        else:
            lo = mid
    mu_lo = hi
    # upper end: first mu with a 1-diagonal midpoint inside (or on) Q
    mu_hi = mu_lo
    for _ in range(64):
        if some_mid_inside(mu_hi):
            break
        mu_hi *= 2
    else:
        mu_hi = mu_lo * 2 ** 64
    lo2, hi2 = mu_lo, mu_hi
    for _ in range(24):
        mid = (lo2 + hi2) / 2
        if some_mid_inside(mid):
            hi2 = mid
        else:
            lo2 = mid
    mu_hi = hi2
    # exact certificate scan over the (possibly empty) window
    for kk in range(1, 32):
        mu = mu_lo + (mu_hi - mu_lo) * Fraction(kk, 32)
        cert = _certificate_at(p, ae_pts, diag_mids, mu)
        if cert is not None:
            return cert
    return None


def band_level(p: CposPolygon, i: int, x: Vec) -> Fraction:
    """Cut area of the opposite-pair chord family member with midpoint x on
    the mid-parallel m(i+1/2); affine between the diagonal splits."""
    mi = p.diagonal_midpoint(i)
    mj = p.diagonal_midpoint(i + 1)
    a0 = area_split(p, i).area_first
    a1 = area_split(p, i + 1).area_first
    if mi == mj:
        if not p.mid_parallel(i).contains(x):
            raise CposError("NotOnLine", "point off the mid-parallel", index=i)
        return a0
    v = mj - mi
    tau = (x - mi).dot(v) / v.dot(v)
    if mi + v.scale(tau) != x:
        raise CposError("NotOnLine", "point off the mid-parallel", index=i)
    return a0 + (a1 - a0) * tau


def rass(p: CposPolygon, sample_count: int = 4) -> dict:
    """Rectified area symmetry set under the almost-symmetry hypothesis.

    Returns the branches of the transform's equidistant symmetry set plus a
    per-level validation: the deep rectified parallels coincide with the
    transform's equidistant family and their self-intersections land on the
    branches, exactly.
    """
    cert = almost_symmetry(p)
    if cert is None:
        raise CposError("NoCertificate", "polygon is not almost symmetric")
    q = cert.q
    branches = ess_trace(q)
    branch_segs = [s.segment for br in branches for s in br.segments]
    ts = sorted({t for br in branches for s in br.segments for t in (s.t0, s.t1)})
    validation = []
    if ts:
        lo, hi = ts[0], ts[-1]
        for kk in range(sample_count):
            t = lo + (hi - lo) * Fraction(2 * kk + 1, 2 * sample_count)
            eq = equidistant(q, t)
            level = band_level(p, 2 * p.n, eq.points[0])
            total = p.area()
            level = min(level, total - level)
            rec: dict = {"t": t, "level": level}
            try:
                rp = rectified_parallel(p, level)
            except CposError as exc:
                rec["error"] = exc.kind
                validation.append(rec)
                continue
            chain_segs = set()
            for chain in rp.chains:
                pts = chain.points
                for k in range(len(pts)):
                    chain_segs.add(Segment(pts[k], pts[(k + 1) % len(pts)]).canonical())
            q_segs = set()
            m = len(eq.points)
            for k in range(m):
                q_segs.add(Segment(eq.points[k], eq.points[(k + 1) % m]).canonical())
            rec["chain_equals_equidistant"] = chain_segs == q_segs
            hits = []
            pts_all = [seg for chain in rp.chains for seg in _chain_segments(chain)]
            for aa in range(len(pts_all)):
                for bb in range(aa + 1, len(pts_all)):
                    got = segment_intersection(pts_all[aa], pts_all[bb])
                    if got is None:
                        continue
                    if got[0] == "overlap":
                        continue
                    hits.append(got[1])
            on_branch = [any(point_on_segment(h, s) for s in branch_segs) for h in hits]
            shared = set()
            for chain in rp.chains:
                for v in chain.points:
                    shared.add((v.x, v.y))
            genuine = [ok for h, ok in zip(hits, on_branch)
                       if (h.x, h.y) not in shared]
            rec["intersections"] = len(genuine)
            rec["all_on_branches"] = all(genuine) if genuine else True
            validation.append(rec)
    return {"certificate": cert, "branches": branches, "validation": validation}


def _chain_segments(chain: PolyChain) -> list[Segment]:
    pts = chain.points
    return [Segment(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts))]
