"""Scene building shared by the CLI and the HTTP service.

Every feature layer is computed here and serialized to plain JSON-ready
dicts; the CLI prints exactly these dicts and the service returns them, so
the two paths agree byte for byte under canonical JSON dumping.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import CposError
from .kernel import Line, Segment, Vec, cross, point_in_convex, polygon_area, rat, rat_str
from .polygon import CposPolygon, is_symmetric
from .evolute import area_evolute, central_symmetry_set, lambda_cycle
from .equidistant import edge_bracket, equidistant, ess_trace, cusp_locus
from .chords import count_midpoint_chords, verify_jump_law
from .pd import (
    choose_convex_mu,
    half_area_chord_check,
    half_area_midpoints,
    pd_transform,
    verify_ae_of_q,
)
from .parallels import almost_symmetry, rass, rectified_parallel

FEATURE_ORDER = [
    "ae", "css", "diagonals", "midparallels", "equidistant", "ess",
    "pd", "n_points", "area_parallel", "almost_symmetry", "rass",
    "nchords", "nchords_map",
]


def canon_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _require(params: dict, key: str):
    if params.get(key) is None:
        raise CposError("MissingParam", f"feature requires the '{key}' parameter")
    return params[key]


def build_layer(p: CposPolygon, feature: str, params: dict) -> dict:
    if feature == "ae":
        return area_evolute(p).to_json()
    if feature == "css":
        return central_symmetry_set(p).to_json()
    if feature == "diagonals":
        return {
            "segments": [
                [p.vertex(i).to_json(), p.vertex(i + p.n).to_json()]
                for i in range(1, p.n + 1)
            ]
        }
    if feature == "midparallels":
        return {
            "lines": [
                {"base": p.diagonal_midpoint(i).to_json(), "dir": p.edge_vector(i).to_json()}
                for i in range(1, p.n + 1)
            ]
        }
    if feature == "equidistant":
        t = rat(_require(params, "t"))
        return equidistant(p, t).to_json()
    if feature == "ess":
        return {"branches": [br.to_json() for br in ess_trace(p)]}
    if feature == "pd":
        mu_param = params.get("mu")
        auto = mu_param in (None, "auto")
        mu = choose_convex_mu(p) if auto else rat(mu_param)
        trace = pd_transform(p, mu)
        doc = trace.to_json()
        doc["auto"] = auto
        doc["n_points"] = [v.to_json() for v in half_area_midpoints(p)]
        return doc
    if feature == "n_points":
        return {"points": [v.to_json() for v in half_area_midpoints(p)]}
    if feature == "area_parallel":
        level = rat(_require(params, "level"))
        return rectified_parallel(p, level).to_json()
    if feature == "almost_symmetry":
        cert = almost_symmetry(p)
        return {"certificate": cert.to_json() if cert else None}
    if feature == "rass":
        rep = rass(p)
        return {
            "mu0": rat_str(rep["certificate"].mu0),
            "branches": [br.to_json() for br in rep["branches"]],
            "validation": [
                {
                    "t": rat_str(rec["t"]),
                    "level": rat_str(rec["level"]),
                    "chain_equals_equidistant": rec.get("chain_equals_equidistant"),
                    "intersections": rec.get("intersections"),
                    "all_on_branches": rec.get("all_on_branches"),
                    "error": rec.get("error"),
                }
                for rec in rep["validation"]
            ],
        }
    if feature == "nchords":
        at = _require(params, "at")
        pt = at if isinstance(at, Vec) else Vec.from_json(at)
        return {"at": pt.to_json(), "n": count_midpoint_chords(p, pt)}
    if feature == "nchords_map":
        faces = nchords_faces(p)
        ae = area_evolute(p)
        return {
            "faces": [
                {"polygon": [v.to_json() for v in poly], "n": nval}
                for poly, nval in faces
            ],
            "ae": ae.to_json(),
        }
    raise CposError("UnknownFeature", f"unknown feature {feature!r}")


def build_scene(p: CposPolygon, features: list[str], params: dict) -> dict:
    layers: dict = {}
    refusals: dict = {}
    for feature in features:
        try:
            layers[feature] = build_layer(p, feature, params)
        except CposError as exc:
            refusals[feature] = exc.to_json()["error"]
    return {"polygon": p.to_json(), "layers": layers, "refusals": refusals}


# ---------------------------------------------------------------------------
# chord-count map faces


def _split_convex(pts: list[Vec], line: Line) -> list[list[Vec]]:
    sides = [line.side_of(v) for v in pts]
    if all(s >= 0 for s in sides) or all(s <= 0 for s in sides):
        return [pts]
    left: list[Vec] = []
    right: list[Vec] = []
    m = len(pts)
    for i in range(m):
        a, sa = pts[i], sides[i]
        b, sb = pts[(i + 1) % m], sides[(i + 1) % m]
        if sa >= 0:
            left.append(a)
        if sa <= 0:
            right.append(a)
        if sa * sb < 0:
            denom = cross(line.dir, b - a)
            t = cross(line.dir, line.base - a) / denom
            x = a + (b - a).scale(t)
            left.append(x)
            right.append(x)
    out = []
    for poly in (left, right):
        dedup = [q for i, q in enumerate(poly) if q != poly[(i - 1) % len(poly)]]
        if len(dedup) >= 3:
            out.append(dedup)
    return out


def _centroid(pts: list[Vec]) -> Vec:
    a = polygon_area(pts)
    cx = Fraction(0)
    cy = Fraction(0)
    m = len(pts)
    for i in range(m):
        u, v = pts[i], pts[(i + 1) % m]
        w = u.cross(v)
        cx += (u.x + v.x) * w
        cy += (u.y + v.y) * w
    return Vec(cx / (6 * a), cy / (6 * a))


def nchords_faces(p: CposPolygon) -> list[tuple[list[Vec], int]]:
    """Convex faces of the polygon cut by the area-evolute support lines,
    each with its chord count (constant per face)."""
    ae = area_evolute(p)
    regions = [list(p.vertices)]
    if ae.degenerate != "point":
        pts = ae.points
        seen = set()
        for i in range(len(pts)):
            a, b = pts[i], pts[(i + 1) % len(pts)]
            if a == b:
                continue
            d = b - a
            key = (d.y / d.x, a.y - (d.y / d.x) * a.x) if d.x != 0 else ("v", a.x)
            if key in seen:
                continue
            seen.add(key)
            line = Line(a, d)
            regions = [piece for region in regions for piece in _split_convex(region, line)]
    out = []
    for region in regions:
        c = _centroid(region)
        candidates = [c]
        for v in region:
            candidates.append(Vec((3 * c.x + v.x) / 4, (3 * c.y + v.y) / 4))
            candidates.append(Vec((7 * c.x + v.x) / 8, (7 * c.y + v.y) / 8))
        nval = None
        for cand in candidates:
            if point_in_convex(region, cand) != 1:
                continue
            try:
                nval = count_midpoint_chords(p, cand)
                break
            except CposError:
                continue
        if nval is None:
            raise CposError("NonGenericProbe", "no countable representative in a face")
        out.append((region, nval))
    return out


# ---------------------------------------------------------------------------
# property suite (the `check` subcommand)


def _check(name, fn) -> dict:
    try:
        ok, detail = fn()
        return {"name": name, "status": "pass" if ok else "fail", "detail": detail}
    except CposError as exc:
        return {"name": name, "status": "skipped", "detail": exc.kind}


def run_checks(p: CposPolygon) -> dict:
    """Run the full per-polygon property suite; every check is exact."""
    sym = is_symmetric(p) is not None
    checks = []

    def chk_parity():
        ae = area_evolute(p)
        css = central_symmetry_set(p)
        if sym:
            return ae.degenerate == "point" and css.degenerate == "point", "point chains"
        if ae.degenerate or css.degenerate:
            raise CposError("Degenerate", "cusp flags withheld")
        n_ae, n_css = sum(ae.cusp_flags), sum(css.cusp_flags)
        return (n_ae % 2 == 1 and n_ae >= 3 and n_css % 2 == 1 and n_css >= n_ae,
                f"ae={n_ae} css={n_css}")

    checks.append(_check("cusp_parity", chk_parity))

    def chk_mid_parallel():
        if sym:
            return True, "vacuous"
        pts = area_evolute(p).points
        ok = all(
            cross(pts[(i + 1) % len(pts)] - pts[i], p.edge_vector(i + 1)) == 0
            for i in range(len(pts))
        )
        return ok, "ae edges parallel to polygon edges"

    checks.append(_check("ae_on_mid_parallels", chk_mid_parallel))

    def chk_jump():
        reports = verify_jump_law(p)
        return all(r["pass"] for r in reports), f"{len(reports)} edges"

    checks.append(_check("chord_count_jump", chk_jump))

    def chk_equidistant():
        lams = lambda_cycle(p)
        m = p.size
        for i in range(1, m + 1):
            a, b = lams[(i - 2) % m], lams[(i - 1) % m]
            lo, hi = min(a, b), max(a, b)
            for t in (lo - Fraction(1, 7), (lo + hi) / 2, hi + Fraction(1, 7)):
                if (edge_bracket(p, i, t) < 0) != (lo < t < hi):
                    return False, f"vertex {i}"
        return True, "bracket sign matches the lambda interval"

    checks.append(_check("equidistant_cusps", chk_equidistant))

    def chk_cusp_locus():
        locus = cusp_locus(p)
        swept = {rec["sweep"].canonical() for rec in locus if not rec["empty"]}
        css = central_symmetry_set(p)
        pts = css.points
        chain = {Segment(pts[k], pts[(k + 1) % len(pts)]).canonical() for k in range(len(pts))}
        chain = {c for c in chain if c[0] != c[1]}
        return swept == chain, f"{len(swept)} swept segments"

    checks.append(_check("cusp_locus_is_css", chk_cusp_locus))

    def chk_ess():
        branches = ess_trace(p)
        if sym:
            return branches == [], "symmetric: empty"
        for br in branches:
            for j in br.junctions:
                if j["cusp"] != j["on_css"]:
                    return False, "junction flag disagreement"
            for ep in br.endpoints:
                if ep.kind not in ("AeCusp", "CssCusp"):
                    return False, "unclassified endpoint"
        return True, f"{len(branches)} branches"

    checks.append(_check("ess_structure", chk_ess))

    def chk_pd():
        rep = verify_ae_of_q(p, Fraction(7, 3))
        return rep["ok"], "closure, telescoping, ae(q) = n-points"

    checks.append(_check("pd_transform", chk_pd))

    def chk_half_area():
        recs = half_area_chord_check(p)
        hits = [r for r in recs if r["applicable"]]
        ok = all(r["midpoint_ok"] and r["half_split"] for r in hits)
        return ok, f"{len(hits)} applicable chords"

    checks.append(_check("half_area_chords", chk_half_area))

    def chk_parallels():
        half = p.area() / 2
        tested = 0
        for k in (3, 7, 12, 15):
            level = half * Fraction(k, 16)
            try:
                rp = rectified_parallel(p, level)
            except CposError:
                continue
            for chain, members in zip(rp.chains, rp.on_ae):
                if chain.cusp_flags != members:
                    return False, f"level {rat_str(level)}"
            tested += 1
        return tested > 0, f"{tested} levels"

    checks.append(_check("parallel_cusps_on_ae", chk_parallels))

    def chk_rass():
        rep = rass(p, sample_count=3)
        for rec in rep["validation"]:
            if rec.get("error"):
                continue
            if not (rec["chain_equals_equidistant"] and rec["all_on_branches"]):
                return False, f"level {rat_str(rec['level'])}"
        return True, f"{len(rep['branches'])} branches"

    def chk_rass_guard():
        if sym:
            raise CposError("SymmetricInput", "SymmetricInput")
        cert = almost_symmetry(p)
        if cert is None:
            raise CposError("NoCertificate", "NoCertificate")
        return chk_rass()

    checks.append(_check("rass_under_almost_symmetry", chk_rass_guard))

    ok = all(c["status"] != "fail" for c in checks)
    return {"ok": ok, "checks": checks}
