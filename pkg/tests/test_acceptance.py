"""Acceptance suite: every criterion runs exact (tolerance zero) and prints
one pass/fail line.

The random ensemble is 500 polygons with fixed seeds, n cycling through
3..8.  Cheap criteria run on the full ensemble; the expensive ones run on
deterministic strided subsets sized for desk-scale runtimes, and
CPOS_ACCEPT_FULL=1 escalates every criterion to the full ensemble.
"""

import os
import random
from fractions import Fraction

from cpos.chords import count_midpoint_chords, verify_jump_law
from cpos.equidistant import edge_bracket, equidistant, ess_trace, cusp_locus
from cpos.errors import CposError
from cpos.evolute import (
    area_evolute,
    central_symmetry_set,
    lambda_cycle,
    nonsymmetric_equal_area_midpoint_check,
)
from cpos.kernel import Segment, Vec, point_on_segment, segment_intersection
from cpos.parallels import almost_symmetry, rass, rectified_parallel
from cpos.pd import (
    area_split,
    half_area_chord_check,
    half_area_midpoints,
    pd_transform,
    verify_ae_of_q,
)
from cpos.polygon import classify_equal_area, is_equal_area, is_symmetric, validate

from conftest import HEX_EA2_POINTS, HEX_SYM_POINTS, ensemble, mk

FULL = os.environ.get("CPOS_ACCEPT_FULL") == "1"
ENSEMBLE_SEED = 424242
ENSEMBLE_SIZE = 500

_cache: dict = {}


def polys():
    if "polys" not in _cache:
        _cache["polys"] = ensemble(ENSEMBLE_SIZE, seed0=ENSEMBLE_SEED)
    return _cache["polys"]


def subset(k: int):
    ps = polys()
    if FULL or k >= len(ps):
        return ps
    step = max(1, len(ps) // k)
    return ps[::step][:k]


def V(x, y):
    return Vec.of(x, y)


def report(name: str, ok: bool, detail: str = ""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
    print(line)
    assert ok, line


# --------------------------------------------------------------------------
# Fixture HEX_EA2


def test_criterion_1_hex_ea2_ae_css_lambda():
    p = mk(HEX_EA2_POINTS)
    ae = area_evolute(p)
    css = central_symmetry_set(p)
    lams = lambda_cycle(p)
    ok = (
        ae.points == [V(0, "3/2"), V("-1/2", "3/2"), V("-1/2", 2)]
        and css.points == [V(0, 2), V(0, 1), V(-1, 2)]
        and lams == [Fraction(1, 3), Fraction(2, 3)] * 3
        and ae.cusp_flags == [True, True, True]
        and css.cusp_flags == [True, True, True]
    )
    report("criterion 1 (HEX_EA2 AE/CSS/lambda, all cusps, exact)", ok)


def test_criterion_2_hex_ea2_equal_area_classification():
    p = mk(HEX_EA2_POINTS)
    cls = classify_equal_area(p)
    rep = nonsymmetric_equal_area_midpoint_check(p)
    ok = (
        is_equal_area(p)
        and cls["n_odd"]
        and cls["alpha"] == 2
        and rep["ok"]
        and rep["lambda_tilde"] == Fraction(1, 6)
    )
    report("criterion 2 (equal-area classification, midpoint property, lambda-tilde = 1/6)", ok)


def test_criterion_3_hex_ea2_n_points_and_transform():
    p = mk(HEX_EA2_POINTS)
    npts = half_area_midpoints(p)
    ok = npts == [V("-1/4", "3/2"), V("-1/2", "7/4"), V("-1/4", "7/4")]
    for mu in (2, 3, 10):
        rep = verify_ae_of_q(p, mu)
        ok = ok and rep["ok"]
    report("criterion 3 (N points exact; AE of transform = N for mu in {2,3,10})", ok)


def test_criterion_4_hex_ea2_half_area_chords():
    p = mk(HEX_EA2_POINTS)
    recs = half_area_chord_check(p)
    hits = [r for r in recs if r["applicable"]]
    ok = bool(hits) and all(
        r["midpoint_ok"] and r["half_split"] and r["cut_area"] == Fraction(13, 4) for r in hits
    )
    report("criterion 4 (half-area chords: midpoint = N, split 13/4 + 13/4)",
           ok, f"{len(hits)} applicable indices")


# --------------------------------------------------------------------------
# Fixture HEX_SYM


def test_criterion_hex_sym():
    p = mk(HEX_SYM_POINTS)
    ae = area_evolute(p)
    css = central_symmetry_set(p)
    ok = ae.points == [V(0, 0)] and css.points == [V(0, 0)]
    ok = ok and count_midpoint_chords(p, V(0, 0)) == 3
    ok = ok and ess_trace(p) == []
    for k in range(0, 21):
        t = Fraction(k, 20)
        if t == Fraction(1, 2):
            continue
        eq = equidistant(p, t)
        pts = eq.points
        m = len(pts)
        for i in range(m):
            for j in range(i + 1, m):
                if (j - i) % m in (0, 1, m - 1):
                    continue
                hit = segment_intersection(
                    Segment(pts[i], pts[(i + 1) % m]), Segment(pts[j], pts[(j + 1) % m])
                )
                ok = ok and hit is None
    report("criterion HEX_SYM (AE = CSS = point, N(center) = 3, simple equidistants, empty ESS)", ok)


# --------------------------------------------------------------------------
# Ensemble criteria


def test_criterion_5_validate_and_cusp_parity():
    failures = 0
    for p in polys():
        try:
            validate(p.vertices)
        except CposError:
            failures += 1
            continue
        ae = area_evolute(p)
        css = central_symmetry_set(p)
        sym = is_symmetric(p) is not None
        if sym:
            if not (ae.degenerate == "point" and css.degenerate == "point"):
                failures += 1
            continue
        if ae.degenerate or css.degenerate:
            failures += 1
            continue
        n_ae, n_css = sum(ae.cusp_flags), sum(css.cusp_flags)
        if not (n_ae % 2 == 1 and n_ae >= 3 and n_css % 2 == 1 and n_css >= n_ae):
            failures += 1
    report("criterion 5 (500 validate + cusp parity)", failures == 0,
           f"{len(polys())} polygons, {failures} failures")


def test_criterion_6_jump_law():
    ps = subset(100)
    failures = 0
    for p in ps:
        reports = verify_jump_law(p)
        if not all(r["pass"] for r in reports):
            failures += 1
    report("criterion 6 (chord-count jump by 2 across every AE edge)",
           failures == 0, f"{len(ps)} polygons, {failures} failures")


def test_criterion_7_cusp_locus_and_bracket():
    failures = 0
    for p in polys():
        lams = lambda_cycle(p)
        m = p.size
        for i in range(1, m + 1):
            a, b = lams[(i - 2) % m], lams[(i - 1) % m]
            lo, hi = min(a, b), max(a, b)
            probes = [lo - Fraction(1, 9), hi + Fraction(1, 9)]
            if lo != hi:
                probes.append((lo + hi) / 2)
            for t in probes:
                if (edge_bracket(p, i, t) < 0) != (lo < t < hi):
                    failures += 1
        swept = {rec["sweep"].canonical() for rec in cusp_locus(p) if not rec["empty"]}
        css = central_symmetry_set(p)
        pts = css.points
        chain = {Segment(pts[k], pts[(k + 1) % len(pts)]).canonical() for k in range(len(pts))}
        chain = {c for c in chain if c[0] != c[1]}
        if swept != chain:
            failures += 1
    report("criterion 7 (cusp locus = CSS, bracket sign = lambda interval)",
           failures == 0, f"{len(polys())} polygons, {failures} failures")


def test_criterion_8_closure_and_ae_of_q():
    rng = random.Random(777)
    failures = 0
    skipped = 0
    for p in polys():
        if is_symmetric(p) is not None:
            skipped += 1
            continue
        try:
            for _ in range(10):
                mu = Fraction(rng.randint(-60, 60), rng.randint(1, 9))
                trace = pd_transform(p, mu)
                if trace.closure_residual != 0:
                    failures += 1
            if not verify_ae_of_q(p, Fraction(7, 3))["ok"]:
                failures += 1
        except CposError:
            skipped += 1
    report("criterion 8 (mu-recurrence closure exactly 0, AE(Q) = N)",
           failures == 0, f"{len(polys())} polygons, {failures} failures, {skipped} outside domain")


def _sweep_points(p, t):
    eq = equidistant(p, t)
    pts = eq.points
    m = len(pts)
    found = []
    for i in range(m):
        for j in range(i + 1, m):
            if (j - i) % m in (0, 1, m - 1):
                continue
            hit = segment_intersection(
                Segment(pts[i], pts[(i + 1) % m]), Segment(pts[j], pts[(j + 1) % m])
            )
            if hit is None:
                continue
            if hit[0] == "overlap":
                return None
            found.append(hit[1])
    return found


def test_criterion_9_ess_structure_and_sweep():
    failures = 0
    for p in polys():
        if is_symmetric(p) is not None:
            continue
        try:
            branches = ess_trace(p)
        except CposError:
            failures += 1
            continue
        ae = area_evolute(p)
        css = central_symmetry_set(p)
        if ae.degenerate or css.degenerate:
            failures += 1
            continue
        ae_cusps = {(q.x, q.y) for q, f in zip(ae.points, ae.cusp_flags) if f}
        css_cusps = {(q.x, q.y) for q, f in zip(css.points, css.cusp_flags) if f}
        for br in branches:
            for ep in br.endpoints:
                pool = ae_cusps if ep.kind == "AeCusp" else css_cusps
                if ep.kind not in ("AeCusp", "CssCusp") or (ep.point.x, ep.point.y) not in pool:
                    failures += 1
            for j in br.junctions:
                if j["cusp"] != j["on_css"]:
                    failures += 1
    sweep_failures = 0
    swept_points = 0
    for p in subset(12):
        if is_symmetric(p) is not None:
            continue
        branches = ess_trace(p)
        segs = [s.segment for br in branches for s in br.segments]
        ts = sorted({t for br in branches for s in br.segments for t in (s.t0, s.t1)})
        if not ts:
            continue
        lo, hi = ts[0], ts[-1]
        for k in range(200):
            t = lo + (hi - lo) * Fraction(k, 199) + Fraction(1, 999983)
            pts = _sweep_points(p, t)
            if pts is None:
                continue
            for x in pts:
                swept_points += 1
                if not any(point_on_segment(x, s) for s in segs):
                    sweep_failures += 1
    ok = failures == 0 and sweep_failures == 0 and swept_points > 0
    report("criterion 9 (ESS endpoints/junctions exact, sweep oracle on traced branches)",
           ok, f"{failures} structure failures, {sweep_failures}/{swept_points} stray sweep points")


def test_criterion_10_rectified_parallels():
    rng = random.Random(909)
    ps = subset(30)
    failures = 0
    levels_checked = 0
    for p in ps:
        half = p.area() / 2
        for _ in range(20):
            a = half * Fraction(rng.randint(1, 255), 256)
            try:
                rp = rectified_parallel(p, a)
            except CposError:
                continue
            levels_checked += 1
            for chain, members in zip(rp.chains, rp.on_ae):
                if chain.cusp_flags != members:
                    failures += 1
        # disjointness in the provably foliated range (below the first AE touch)
        crit = min(
            min(sp.area_first, sp.area_second)
            for sp in (area_split(p, i) for i in range(1, p.n + 1))
        )
        chains = []
        for k in range(1, 6):
            lv = crit * Fraction(k, 6)
            try:
                rp = rectified_parallel(p, lv)
            except CposError:
                continue
            segs = []
            for c in rp.chains:
                pts = c.points
                segs += [Segment(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]
            chains.append(segs)
        for x in range(len(chains)):
            for y in range(x + 1, len(chains)):
                for s1 in chains[x]:
                    for s2 in chains[y]:
                        if segment_intersection(s1, s2) is not None:
                            failures += 1
    ok = failures == 0 and levels_checked >= 15 * len(ps)
    report("criterion 10 (cusp flag = AE membership at 20 levels; shallow chains disjoint)",
           ok, f"{len(ps)} polygons, {levels_checked} levels, {failures} failures")


def test_criterion_11_rass():
    ps = subset(60)
    failures = 0
    certs = 0
    for p in ps:
        if is_symmetric(p) is not None:
            continue
        try:
            cert = almost_symmetry(p)
        except CposError:
            continue
        if cert is None:
            continue
        certs += 1
        rep = rass(p, sample_count=3)
        q = rep["certificate"].q
        ae_q = area_evolute(q)
        css_q = central_symmetry_set(q)
        if ae_q.degenerate or css_q.degenerate:
            failures += 1
            continue
        ae_cusps = {(v.x, v.y) for v, f in zip(ae_q.points, ae_q.cusp_flags) if f}
        css_cusps = {(v.x, v.y) for v, f in zip(css_q.points, css_q.cusp_flags) if f}
        for br in rep["branches"]:
            for ep in br.endpoints:
                pool = ae_cusps if ep.kind == "AeCusp" else css_cusps
                if (ep.point.x, ep.point.y) not in pool:
                    failures += 1
        for rec in rep["validation"]:
            if rec.get("error"):
                continue
            if not (rec["chain_equals_equidistant"] and rec["all_on_branches"]):
                failures += 1
    ok = failures == 0 and certs > 0
    report("criterion 11 (RASS = ESS(Q); parallel self-intersections on branches)",
           ok, f"{certs} certificates, {failures} failures")
