"""The parallel-diagonal transform and half-area chord midpoints.

Given a non-symmetric CPOS polygon P, the transform Q is the CPOS polygon
whose vertices ride the mid-parallels of P and whose sides are parallel to
P's great diagonals.  It is determined up to the equidistant family by one
seed parameter mu; the closure of the defining recurrence is exact.  The
half-area midpoints N(i+1/2) (one per mid-parallel, where the chord family
joining opposite edges bisects the total area) coincide with the area evolute
of Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CposError
from .kernel import Vec, cross, rat, rat_str, polygon_area
from .polygon import CposPolygon, is_symmetric, validate


@dataclass
class AreaSplit:
    """Areas of the two regions cut by great diagonal d_i.

    ``area_first`` is the region walked counterclockwise from P_i to P_{i+n}
    (it contains P_{i+1}..P_{i+n-1})."""

    index: int
    area_first: Fraction
    area_second: Fraction

    @property
    def diff(self) -> Fraction:
        return self.area_second - self.area_first


@dataclass
class PdConstructionTrace:
    mu: Fraction
    mu_seq: list[Fraction]       # mu(i+1/2), i = 0..2n-1
    closure_residual: Fraction   # mu(2n+1/2) - mu(1/2), exactly 0
    v: list[Vec]                 # v(i+1/2) = M_{i+1} - M_i, i = 0..2n-1 (period n)
    u: list[Vec]                 # u_i = P_i - M_i, i = 1..2n
    vertices: list[Vec]          # Q(1/2), Q(3/2), ..., Q(2n-1/2)

    def q_vertex(self, k: int) -> Vec:
        """Q(k+1/2), cyclic."""
        return self.vertices[k % len(self.vertices)]

    def beta(self, k: int) -> Fraction:
        n = len(self.vertices) // 2
        return self.mu_seq[k % (2 * n)] - self.mu_seq[(k + n) % (2 * n)]

    def gamma(self, k: int) -> Fraction:
        n = len(self.vertices) // 2
        return self.mu_seq[k % (2 * n)] + self.mu_seq[(k + n) % (2 * n)]

    def to_json(self) -> dict:
        return {
            "mu": rat_str(self.mu),
            "mu_seq": [rat_str(v) for v in self.mu_seq],
            "closure_residual": rat_str(self.closure_residual),
            "vertices": [v.to_json() for v in self.vertices],
        }


def _mids_and_frames(p: CposPolygon):
    n = p.n
    mids = [p.diagonal_midpoint(i) for i in range(1, n + 1)]  # M_1..M_n
    u = [p.vertex(i) - p.diagonal_midpoint(i) for i in range(1, 2 * n + 1)]
    v = []
    for k in range(2 * n):  # v(k+1/2) = M_{k+1} - M_k with M cyclic period n
        v.append(mids[(k + 1 - 1) % n] - mids[(k - 1) % n])
    return mids, u, v


def pd_transform(p: CposPolygon, mu) -> PdConstructionTrace:
    """Run the side-parallelism recurrence from seed mu(1/2) = mu.

    Raises SymmetricInput when the area evolute degenerates to a point and
    ZeroPivot when some [v(i+1/2), u_i] vanishes with v not identically zero.
    """
    mu = rat(mu)
    if is_symmetric(p) is not None:
        raise CposError("SymmetricInput", "transform undefined for symmetric polygons")
    n = p.n
    m = 2 * n
    mids, u, v = _mids_and_frames(p)
    mu_seq = [Fraction(0)] * m
    mu_seq[0] = mu
    last = mu
    for i in range(1, m + 1):  # step i determines mu(i+1/2)
        piv = cross(v[i % m], u[i - 1])       # [v(i+1/2), u_i]
        prev = cross(v[(i - 1) % m], u[i - 1])  # [v(i-1/2), u_i]
        if piv == 0:
            raise CposError("ZeroPivot", "[v(i+1/2), u_i] = 0: transform undefined", index=i)
        nxt = -(1 - last) * prev / piv
        if i < m:
            mu_seq[i] = nxt
        last = nxt
    residual = last - mu
    if residual != 0:
        raise CposError("ClosureFailure", f"recurrence failed to close: {residual}")
    vertices = [mids[(k - 1) % n] + v[k].scale(mu_seq[k]) for k in range(m)]
    return PdConstructionTrace(
        mu=mu, mu_seq=mu_seq, closure_residual=residual, v=v, u=u, vertices=vertices
    )


def q_polygon(trace: PdConstructionTrace) -> CposPolygon:
    """Validate the traced vertices as a CPOS polygon (convex mu required)."""
    return validate(trace.vertices)


def area_split(p: CposPolygon, i: int) -> AreaSplit:
    """Exact areas of the two sides of great diagonal d_i."""
    walk = [p.vertex(i + k) for k in range(0, p.n + 1)]
    first = polygon_area(walk)
    return AreaSplit(index=i, area_first=first, area_second=p.area() - first)


def half_area_midpoints(p: CposPolygon) -> list[Vec]:
    """N(i+1/2) for i = 1..n: the point of the mid-parallel where the chord
    family joining edge i to edge i+n cuts the polygon area in half.

    The cut area is affine along the mid-parallel (rotating a chord between
    parallel lines about its midpoint preserves the cut), with values
    area_first(d_i) at M_i and area_first(d_{i+1}) at M_{i+1}; the affine map
    is extended beyond the feasible chord segment when needed.
    """
    n = p.n
    half = p.area() / 2
    out = []
    for i in range(1, n + 1):
        mi = p.diagonal_midpoint(i)
        mj = p.diagonal_midpoint(i + 1)
        a0 = area_split(p, i).area_first
        a1 = area_split(p, i + 1).area_first
        if a0 == a1:
            if a0 != half:
                raise CposError("DegenerateFamily",
                                "constant non-bisecting chord family", index=i)
            out.append(mi + (mj - mi).scale(Fraction(1, 2)))
            continue
        tau = (half - a0) / (a1 - a0)
        out.append(mi + (mj - mi).scale(tau))
    return out


def verify_ae_of_q(p: CposPolygon, mu) -> dict:
    """Exact check that the area evolute of Q equals the half-area midpoints,
    with the per-step gamma telescoping identity as an intermediate."""
    trace = pd_transform(p, mu)
    n = p.n
    m = 2 * n
    mids, u, v = _mids_and_frames(p)
    npts = half_area_midpoints(p)
    ae_q = [(trace.q_vertex(k) + trace.q_vertex(k + n)).scale(Fraction(1, 2)) for k in range(1, n + 1)]
    equal = [ae_q[i - 1] == npts[i - 1] for i in range(1, n + 1)]
    # gamma telescoping: T(i) = T(i-1) - 2 [v(i-1/2), u_{i-1}] with
    # T(i) = gamma(i+1/2) [v(i+1/2), u_i]
    tele = []
    for i in range(1, m + 1):
        t_cur = trace.gamma(i) * cross(v[i % m], u[i - 1])
        t_prev = trace.gamma(i - 1) * cross(v[(i - 1) % m], u[(i - 2) % m])
        tele.append(t_cur == t_prev - 2 * cross(v[(i - 1) % m], u[(i - 2) % m]))
    beta_anti = trace.beta(0) == -trace.beta(n)
    return {
        "ae_equals_half_area_midpoints": all(equal),
        "per_index": equal,
        "gamma_telescoping": all(tele),
        "beta_antisymmetry": beta_anti,
        "closure_residual": trace.closure_residual,
        "ok": all(equal) and all(tele) and beta_anti and trace.closure_residual == 0,
    }


def half_area_chord_check(p: CposPolygon) -> list[dict]:
    """Where the line P_i N(i+1/2) meets the open opposite segment
    P_{i+n} P_{i+n+1}, the chord it cuts has midpoint N(i+1/2) and splits the
    area exactly in half.  Returns one record per index i = 1..2n with
    ``applicable`` False when the line misses the segment.
    """
    from .kernel import Segment, line_intersect, point_on_segment, Line

    n = p.n
    npts = half_area_midpoints(p)
    half = p.area() / 2
    out = []
    for i in range(1, 2 * n + 1):
        npt = npts[(i - 1) % n]
        pi = p.vertex(i)
        rec: dict = {"index": i, "applicable": False}
        if npt == pi:
            out.append(rec)
            continue
        ray = Line(pi, npt - pi)
        opp = Segment(p.vertex(i + n), p.vertex(i + n + 1))
        hit = line_intersect(ray, Line(opp.a, opp.direction))
        if hit is not None and point_on_segment(hit, opp):
            rec["applicable"] = True
            rec["chord_end"] = hit
            rec["midpoint_ok"] = (pi + hit).scale(Fraction(1, 2)) == npt
            walk = [pi] + [p.vertex(i + k) for k in range(1, n + 1)] + [hit]
            rec["cut_area"] = polygon_area(walk)
            rec["half_split"] = rec["cut_area"] == half
        out.append(rec)
    return out


def choose_convex_mu(p: CposPolygon) -> Fraction:
    """A seed mu whose transform is a valid convex CPOS polygon containing the
    area evolute of P strictly inside; found by doubling search."""
    from .evolute import area_evolute

    if is_symmetric(p) is not None:
        raise CposError("SymmetricInput", "transform undefined for symmetric polygons")
    ae = area_evolute(p)
    mu = Fraction(1)
    for _ in range(64):
        try:
            trace = pd_transform(p, mu)
            q = q_polygon(trace)
            if all(q.contains(pt) == 1 for pt in ae.points):
                return mu
        except CposError:
            pass
        mu *= 2
    raise CposError("NotFound", "no convex transform found within 64 doublings")
