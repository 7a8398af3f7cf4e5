from fractions import Fraction

from cpos.equidistant import (
    cusp_locus,
    edge_bracket,
    equidistant,
    ess_trace,
    moving_edge,
)
from cpos.evolute import area_evolute, central_symmetry_set, lambda_cycle
from cpos.kernel import Line, Segment, Vec, cross, line_intersect, point_on_segment, segment_intersection
from cpos.polygon import is_symmetric

from conftest import ensemble


def V(x, y):
    return Vec.of(x, y)


def test_equidistant_levels(hex_ea2):
    e0 = equidistant(hex_ea2, 0)
    assert e0.points == list(hex_ea2.vertices)
    assert not any(e0.cusp_flags)
    e1 = equidistant(hex_ea2, 1)
    assert e1.points == [hex_ea2.vertex(i + 3) for i in range(1, 7)]
    half = equidistant(hex_ea2, "1/2")
    mids = [hex_ea2.diagonal_midpoint(i) for i in (1, 2, 3)]
    assert half.points == mids + mids
    assert all(half.cusp_flags)


def test_edge_direction_invariance(hex_ea2):
    for i in range(1, 7):
        for t in (Fraction(1, 5), Fraction(2, 3), Fraction(7, 4), Fraction(-1, 2)):
            assert cross(moving_edge(hex_ea2, i, t), hex_ea2.edge_vector(i)) == 0


def test_edge_vanishes_at_lambda(hex_ea2):
    lams = lambda_cycle(hex_ea2)
    for i in range(1, 7):
        lam = lams[i - 1]
        assert moving_edge(hex_ea2, i, lam).is_zero()


def test_cusp_interval_matches_bracket_sign():
    for p in ensemble(25, seed0=5000):
        lams = lambda_cycle(p)
        m = p.size
        for i in range(1, m + 1):
            a, b = lams[(i - 2) % m], lams[(i - 1) % m]
            lo, hi = min(a, b), max(a, b)
            probes = [lo - Fraction(1, 7), hi + Fraction(1, 7)]
            if lo != hi:
                probes.append((lo + hi) / 2)
            for t in probes:
                inside = lo < t < hi
                assert (edge_bracket(p, i, t) < 0) == inside


def test_cusp_locus_sweeps_css(hex_ea2):
    locus = cusp_locus(hex_ea2)
    assert locus[1]["t_interval"] == (Fraction(1, 3), Fraction(2, 3))
    swept = {rec["sweep"].canonical() for rec in locus if not rec["empty"]}
    css = central_symmetry_set(hex_ea2)
    chain = set()
    pts = css.points
    for k in range(len(pts)):
        chain.add(Segment(pts[k], pts[(k + 1) % len(pts)]).canonical())
    assert swept == chain


def test_cusp_locus_symmetric_empty(hex_sym):
    assert all(rec["empty"] for rec in cusp_locus(hex_sym))


def test_cusp_locus_equals_css_on_ensemble():
    for p in ensemble(25, seed0=6000):
        if is_symmetric(p) is not None:
            continue
        locus = cusp_locus(p)
        swept = {rec["sweep"].canonical() for rec in locus if not rec["empty"]}
        css = central_symmetry_set(p)
        pts = css.points
        chain = {Segment(pts[k], pts[(k + 1) % len(pts)]).canonical() for k in range(len(pts))}
        chain = {c for c in chain if c[0] != c[1]}
        assert swept == chain


def test_ess_symmetric_is_empty(hex_sym):
    assert ess_trace(hex_sym) == []


def test_ess_hex_ea2_endpoints_are_cusps(hex_ea2):
    branches = ess_trace(hex_ea2)
    assert branches, "expected a nonempty symmetry set"
    ae = area_evolute(hex_ea2)
    css = central_symmetry_set(hex_ea2)
    ae_cusps = {(p.x, p.y) for p, f in zip(ae.points, ae.cusp_flags) if f}
    css_cusps = {(p.x, p.y) for p, f in zip(css.points, css.cusp_flags) if f}
    for br in branches:
        assert len(br.endpoints) == 2
        for ep in br.endpoints:
            key = (ep.point.x, ep.point.y)
            if ep.kind == "AeCusp":
                assert key in ae_cusps
            else:
                assert ep.kind == "CssCusp"
                assert key in css_cusps
    # both cusp families actually appear
    kinds = {ep.kind for br in branches for ep in br.endpoints}
    assert kinds == {"AeCusp", "CssCusp"}


def test_ess_segments_lie_on_cross_support_lines(hex_ea2):
    for br in ess_trace(hex_ea2):
        for seg in br.segments:
            a, b = seg.pair
            base = line_intersect(hex_ea2.edge_line(a), hex_ea2.edge_line(b))
            far = line_intersect(hex_ea2.edge_line(a + 3), hex_ea2.edge_line(b + 3))
            line = Line(base, far - base)
            assert line.contains(seg.p0) and line.contains(seg.p1)


def _sweep_self_intersections(p, t):
    """Brute-force double points of the level-t equidistant."""
    eq = equidistant(p, t)
    pts = eq.points
    m = len(pts)
    found = []
    for i in range(m):
        for j in range(i + 1, m):
            if (j - i) % m in (0, 1, m - 1):
                continue
            s1 = Segment(pts[i], pts[(i + 1) % m])
            s2 = Segment(pts[j], pts[(j + 1) % m])
            hit = segment_intersection(s1, s2)
            if hit is None:
                continue
            if hit[0] == "overlap":
                return None  # non-generic sample level; caller skips
            found.append(hit[1])
    return found


def test_ess_sweep_oracle(hex_ea2):
    branches = ess_trace(hex_ea2)
    segs = [s.segment for br in branches for s in br.segments]
    ts = sorted({s.t0 for br in branches for s in br.segments}
                | {s.t1 for br in branches for s in br.segments})
    lo, hi = ts[0], ts[-1]
    total = 0
    for k in range(201):
        t = lo + (hi - lo) * Fraction(k, 200) + Fraction(1, 999983)
        pts = _sweep_self_intersections(hex_ea2, t)
        if pts is None:
            continue
        for x in pts:
            total += 1
            assert any(point_on_segment(x, s) for s in segs), f"stray double point {x} at t={t}"
    assert total > 0


def test_ess_junction_flag_agrees_with_css_membership():
    checked = 0
    for p in ensemble(20, seed0=7000):
        if is_symmetric(p) is not None:
            continue
        try:
            branches = ess_trace(p)
        except Exception:
            continue
        for br in branches:
            for j in br.junctions:
                assert j["cusp"] == j["on_css"]
                checked += 1
    assert checked > 0


def test_ess_endpoints_classify_on_ensemble():
    for p in ensemble(20, seed0=8000):
        if is_symmetric(p) is not None:
            continue
        branches = ess_trace(p)
        ae = area_evolute(p)
        css = central_symmetry_set(p)
        if ae.degenerate or css.degenerate:
            continue
        ae_cusps = {(q.x, q.y) for q, f in zip(ae.points, ae.cusp_flags) if f}
        css_cusps = {(q.x, q.y) for q, f in zip(css.points, css.cusp_flags) if f}
        for br in branches:
            for ep in br.endpoints:
                key = (ep.point.x, ep.point.y)
                if ep.kind == "AeCusp":
                    assert key in ae_cusps
                else:
                    assert key in css_cusps


def test_symmetric_equidistants_simple(hex_sym):
    for k in range(0, 21):
        t = Fraction(k, 20)
        if t == Fraction(1, 2):
            continue
        pts = _sweep_self_intersections(hex_sym, t)
        assert pts == []
