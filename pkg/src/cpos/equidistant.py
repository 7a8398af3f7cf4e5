"""Equidistants, their cusps, the cusp locus, and the equidistant symmetry set.

The equidistant at level t moves every vertex along its great diagonal:
P_i(t) = P_i + t(P_{i+n} - P_i).  Vertex i is a cusp when the bracket of its
two moving edges goes negative.  The self-intersections of the whole family
form the equidistant symmetry set (ESS); per edge pair the intersection point
of the two moving support lines is affine in t, so each pair contributes a
straight segment, and segments chain through vertex-on-edge events.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CposError
from .kernel import Segment, Vec, cross, rat, rat_str
from .evolute import diagonal_frames, lambda_cycle
from .polygon import CposPolygon, is_symmetric


@dataclass
class Equidistant:
    t: Fraction
    points: list[Vec]       # 2n vertices P_i(t)
    cusp_flags: list[bool]  # f_i(t) < 0 per vertex

    def to_json(self) -> dict:
        return {
            "t": rat_str(self.t),
            "points": [p.to_json() for p in self.points],
            "cusps": self.cusp_flags,
            "closed": True,
        }


def vertex_at(p: CposPolygon, i: int, t: Fraction) -> Vec:
    """P_i(t) = P_i + t (P_{i+n} - P_i)."""
    return p.vertex(i) + (p.vertex(i + p.n) - p.vertex(i)).scale(t)


def moving_edge(p: CposPolygon, i: int, t: Fraction) -> Vec:
    """Edge vector e(i+1/2)(t) of the level-t equidistant."""
    return vertex_at(p, i + 1, t) - vertex_at(p, i, t)


def edge_bracket(p: CposPolygon, i: int, t: Fraction) -> Fraction:
    """f_i(t) = [e(i-1/2)(t), e(i+1/2)(t)]; negative exactly at a cusp."""
    return cross(moving_edge(p, i - 1, t), moving_edge(p, i, t))


def equidistant(p: CposPolygon, t) -> Equidistant:
    t = rat(t)
    m = p.size
    pts = [vertex_at(p, i, t) for i in range(1, m + 1)]
    flags = [edge_bracket(p, i, t) < 0 for i in range(1, m + 1)]
    return Equidistant(t=t, points=pts, cusp_flags=flags)


def cusp_locus(p: CposPolygon) -> list[dict]:
    """Per vertex i = 1..n: the open t-interval where P_i(t) is a cusp and the
    CSS edge it sweeps (D(i-1/2) to D(i+1/2) along d_i)."""
    frames = diagonal_frames(p)
    lams = lambda_cycle(p, frames)
    m = p.size
    n = p.n

    def lam(i: int) -> Fraction:
        return lams[(i - 1) % m]

    out = []
    for i in range(1, n + 1):
        a, b = lam(i - 1), lam(i)
        lo, hi = min(a, b), max(a, b)
        out.append(
            {
                "vertex": i,
                "t_interval": (lo, hi),
                "empty": lo == hi,
                "sweep": Segment(vertex_at(p, i, lo), vertex_at(p, i, hi)),
            }
        )
    return out


# ---------------------------------------------------------------------------
# ESS tracing


@dataclass(frozen=True)
class EssEndpoint:
    kind: str          # "CssCusp" | "AeCusp"
    point: Vec
    t: Fraction


@dataclass
class EssSegmentRec:
    pair: tuple[int, int]
    t0: Fraction
    t1: Fraction
    p0: Vec
    p1: Vec
    events0: list[tuple]  # (vertex k, continuation pair | None, reason)
    events1: list[tuple]

    @property
    def segment(self) -> Segment:
        return Segment(self.p0, self.p1)

    def endpoint(self, end: int) -> Vec:
        return self.p0 if end == 0 else self.p1

    def t_of(self, end: int) -> Fraction:
        return self.t0 if end == 0 else self.t1

    def events(self, end: int):
        return self.events0 if end == 0 else self.events1


@dataclass
class EssBranch:
    """A maximal chain of ESS segments.

    ``endpoint_kinds`` has two entries for open branches (empty for closed
    loops); ``junction_cusps`` flags each interior junction."""

    segments: list[EssSegmentRec]
    endpoints: list[EssEndpoint] = field(default_factory=list)
    junctions: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "segments": [
                {
                    "pair": list(s.pair),
                    "t_range": [rat_str(s.t0), rat_str(s.t1)],
                    "points": [s.p0.to_json(), s.p1.to_json()],
                }
                for s in self.segments
            ],
            "endpoint_kinds": [e.kind for e in self.endpoints],
            "endpoints": [e.point.to_json() for e in self.endpoints],
            "junction_cusps": [j["cusp"] for j in self.junctions],
        }


class _Affine:
    """q(t) = a + b t over exact rationals."""

    __slots__ = ("a", "b")

    def __init__(self, a: Fraction, b: Fraction):
        self.a = a
        self.b = b

    def __call__(self, t: Fraction) -> Fraction:
        return self.a + self.b * t

    def __sub__(self, other: "_Affine") -> "_Affine":
        return _Affine(self.a - other.a, self.b - other.b)

    def root(self) -> Fraction | None:
        if self.b == 0:
            return None
        return -self.a / self.b


_NEG_INF = object()
_POS_INF = object()


def _le(a, b) -> bool:
    if a is _NEG_INF or b is _POS_INF:
        return True
    if a is _POS_INF or b is _NEG_INF:
        return False
    return a <= b


def _product_nonpositive(f: _Affine, g: _Affine) -> list[tuple]:
    """Solution set of f(t)*g(t) <= 0 as a list of closed intervals
    (endpoints may be the infinity sentinels)."""
    fr, gr = f.root(), g.root()
    if f.b == 0 and g.b == 0:
        neg = (f.a * g.a) <= 0
        return [(_NEG_INF, _POS_INF)] if neg else []
    if f.b == 0 or g.b == 0:
        const, lin = (f, g) if f.b == 0 else (g, f)
        if const.a == 0:
            return [(_NEG_INF, _POS_INF)]
        r = lin.root()
        # sign of product flips at r
        probe_hi = lin(r + 1) * const.a
        if probe_hi <= 0:
            return [(r, _POS_INF)]
        return [(_NEG_INF, r)]
    lo, hi = min(fr, gr), max(fr, gr)
    opens_up = (f.b * g.b) > 0
    if opens_up:
        return [(lo, hi)]
    if lo == hi:
        return [(_NEG_INF, _POS_INF)]  # parabola <= 0 everywhere except... touches 0
    return [(_NEG_INF, lo), (hi, _POS_INF)]


def _intersect_interval_lists(xs: list[tuple], ys: list[tuple]) -> list[tuple]:
    out = []
    for a0, a1 in xs:
        for b0, b1 in ys:
            lo = b0 if _le(a0, b0) else a0
            hi = b1 if _le(b1, a1) else a1
            if _le(lo, hi):
                out.append((lo, hi))
    return out


def _pair_valid(a: int, b: int, m: int) -> bool:
    d = (b - a) % m
    return d not in (0, 1, m - 1, m // 2)


def _canon_pair(a: int, b: int, m: int) -> tuple[int, int]:
    a = (a - 1) % m + 1
    b = (b - 1) % m + 1
    return (a, b) if a < b else (b, a)


def _pair_segment(p: CposPolygon, a: int, b: int, lams: list[Fraction]):
    """Feasible t-intervals and the affine intersection point for edges a, b."""
    m = p.size
    wa, wb = p.edge_vector(a), p.edge_vector(b)
    denom = cross(wa, wb)
    if denom == 0:
        return None  # only opposite edges are parallel; excluded anyway
    pa, da = p.vertex(a), p.vertex(a + p.n) - p.vertex(a)
    pb, db = p.vertex(b), p.vertex(b + p.n) - p.vertex(b)
    # X(t) = P_a(t) + s_a(t) w_a with s_a(t) = [P_b(t)-P_a(t), w_b]/[w_a, w_b]
    diff0 = pb - pa
    diff1 = db - da
    s_a = _Affine(cross(diff0, wb) / denom, cross(diff1, wb) / denom)
    s_b = _Affine(cross(diff0, wa) / denom, cross(diff1, wa) / denom)
    la = lams[(a - 1) % m]
    lb = lams[(b - 1) % m]
    g_a = _Affine(Fraction(1), Fraction(-1) / la)   # (la - t)/la
    g_b = _Affine(Fraction(1), Fraction(-1) / lb)
    feas = _intersect_interval_lists(
        _product_nonpositive(s_a, s_a - g_a),
        _product_nonpositive(s_b, s_b - g_b),
    )

    def point_at(t: Fraction) -> Vec:
        return pa + da.scale(t) + wa.scale(s_a(t))

    return s_a, s_b, g_a, g_b, feas, point_at


def _events_at(p, a, b, s_a, s_b, g_a, g_b, t):
    """Tight constraints at an interval endpoint.

    Each event is (vertex k, continuation pair or None, reason); reason is
    "valid", "adjacent" (would need adjacent edges: CSS cusp ending) or
    "opposite" (would need opposite edges: AE cusp ending).
    """
    m = p.size
    ev = []
    if s_a(t) == 0:
        ev.append((a, (a - 1, b)))
    if s_a(t) == g_a(t):
        ev.append((a + 1, (a + 1, b)))
    if s_b(t) == 0:
        ev.append((b, (a, b - 1)))
    if s_b(t) == g_b(t):
        ev.append((b + 1, (a, b + 1)))
    out = []
    for k, (x, y) in ev:
        k = (k - 1) % m + 1
        d = (y - x) % m
        if _pair_valid(x, y, m):
            out.append((k, _canon_pair(x, y, m), "valid"))
        elif d == m // 2:
            out.append((k, None, "opposite"))
        else:
            out.append((k, None, "adjacent"))
    return out


def ess_trace(p: CposPolygon) -> list[EssBranch]:
    """All branches of the equidistant symmetry set.

    Symmetric polygons have an empty ESS.  Partial CSS degeneracy
    (D(i-1/2) = D(i+1/2) on a non-symmetric polygon) is refused: two adjacent
    moving edges then collapse at the same level, and the continuation is
    ambiguous.
    """
    if is_symmetric(p) is not None:
        return []
    frames = diagonal_frames(p)
    for f in frames:
        if f.css_prev == f.css_next:
            raise CposError("DegenerateCss", "coincident adjacent CSS points", index=f.index)
    lams = lambda_cycle(p, frames)
    m = p.size
    segments: list[EssSegmentRec] = []
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            if not _pair_valid(a, b, m):
                continue
            got = _pair_segment(p, a, b, lams)
            if got is None:
                continue
            s_a, s_b, g_a, g_b, feas, point_at = got
            for t0, t1 in feas:
                if t0 is _NEG_INF or t1 is _POS_INF:
                    raise CposError("NonGenericCoincidence",
                                    f"unbounded intersection range for pair ({a},{b})")
                if t0 == t1:
                    continue  # grazing contact, not a segment
                segments.append(
                    EssSegmentRec(
                        pair=(a, b),
                        t0=t0,
                        t1=t1,
                        p0=point_at(t0),
                        p1=point_at(t1),
                        events0=_events_at(p, a, b, s_a, s_b, g_a, g_b, t0),
                        events1=_events_at(p, a, b, s_a, s_b, g_a, g_b, t1),
                    )
                )
    return _assemble_branches(p, lams, segments)


def _classify_terminal(seg: EssSegmentRec, end: int) -> EssEndpoint:
    reasons = {reason for _, _, reason in seg.events(end)}
    kind = "AeCusp" if "opposite" in reasons else "CssCusp"
    return EssEndpoint(kind=kind, point=seg.endpoint(end), t=seg.t_of(end))


def _assemble_branches(p, lams, segments: list[EssSegmentRec]) -> list[EssBranch]:
    # index endpoints for junction matching: key (point, t)
    table: dict[tuple, list[tuple[int, int]]] = {}
    for idx, seg in enumerate(segments):
        for end in (0, 1):
            key = ((seg.endpoint(end).x, seg.endpoint(end).y), seg.t_of(end))
            table.setdefault(key, []).append((idx, end))

    def is_terminal(seg: EssSegmentRec, end: int) -> bool:
        evs = seg.events(end)
        if not evs:
            raise CposError("NonGenericCoincidence", "interval endpoint with no tight constraint")
        return all(cont is None for _, cont, _ in evs)

    def partner(idx: int, end: int) -> tuple[int, int] | None:
        """The (segment, end) this endpoint joins, or None at a terminal."""
        seg = segments[idx]
        if is_terminal(seg, end):
            return None
        key = ((seg.endpoint(end).x, seg.endpoint(end).y), seg.t_of(end))
        cands = [(i, e) for (i, e) in table[key] if i != idx]
        if len(cands) != 1:
            raise CposError("NonGenericCoincidence",
                            f"{1 + len(cands)} segments meet at one event point")
        want = {cont for _, cont, _ in seg.events(end) if cont is not None}
        other = segments[cands[0][0]]
        if other.pair not in want:
            raise CposError("NonGenericCoincidence", "continuation pair mismatch at junction")
        return cands[0]

    visited = [False] * len(segments)
    branches: list[EssBranch] = []
    for start in range(len(segments)):
        if visited[start]:
            continue
        # walk backward from (start, end 0) to a terminal, or around a loop
        idx, end = start, 0
        seen = {(idx, end)}
        while True:
            back = partner(idx, end)
            if back is None:
                break
            idx, end = back[0], 1 - back[1]  # enter previous segment, face its start
            if (idx, end) in seen:
                break
            seen.add((idx, end))
        # traverse forward; `end` is the entry end of the first segment
        chain: list[tuple[int, int]] = []
        junctions: list[dict] = []
        cur, cur_end = idx, end
        closed = False
        while True:
            visited[cur] = True
            chain.append((cur, cur_end))
            far = 1 - cur_end
            nxt = partner(cur, far)
            if nxt is None:
                break
            junctions.append(_junction_info(p, lams, segments[cur], far,
                                            segments[nxt[0]], nxt[1]))
            if (nxt[0], nxt[1]) == (idx, end):
                closed = True
                break
            cur, cur_end = nxt
        segs = [segments[i] for i, _ in chain]
        endpoints = []
        if not closed:
            first_idx, first_end = chain[0]
            last_idx, last_end = chain[-1]
            endpoints = [
                _classify_terminal(segments[first_idx], first_end),
                _classify_terminal(segments[last_idx], 1 - last_end),
            ]
        branches.append(EssBranch(segments=segs, endpoints=endpoints, junctions=junctions))
    return branches


def _junction_info(p, lams, seg_a: EssSegmentRec, end_a: int, seg_b: EssSegmentRec, end_b: int) -> dict:
    """Cusp test at an interior junction (ends end_a/end_b meet there): both
    incident segments on the same side of the moving vertex's diagonal,
    cross-checked against CSS membership."""
    m = p.size
    t = seg_a.t_of(end_a)
    pt = seg_a.endpoint(end_a)
    valid = [k for k, cont, _ in seg_a.events(end_a) if cont is not None]
    k = valid[0]
    d = p.diagonal(k)
    side_a = d.side_of(seg_a.endpoint(1 - end_a))
    side_b = d.side_of(seg_b.endpoint(1 - end_b))
    if side_a == 0 or side_b == 0:
        raise CposError("NonGenericCoincidence", "ESS segment collinear with a diagonal at a junction")
    same_side = side_a == side_b
    la = lams[(k - 2) % m]  # lambda(k-1/2)
    lb = lams[(k - 1) % m]  # lambda(k+1/2)
    on_css = min(la, lb) < t < max(la, lb)
    return {
        "vertex": k,
        "point": pt,
        "t": t,
        "cusp": same_side,
        "on_css": on_css,
    }
