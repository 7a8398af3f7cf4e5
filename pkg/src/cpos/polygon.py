"""Validated convex polygons with parallel opposite sides (CPOS).

A CPOS polygon has 2n vertices (n >= 3), positively oriented, convex with no
parallel adjacent sides, and side i+n parallel to side i.  Indices are 1-based
and cyclic modulo 2n throughout the public API.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CposError, ValidationError
from .kernel import Line, Segment, Vec, cross, midpoint, point_in_convex, polygon_area, rat, sign


@dataclass(frozen=True)
class CposPolygon:
    vertices: tuple[Vec, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices) // 2

    def vertex(self, i: int) -> Vec:
        """P_i, 1-based cyclic."""
        return self.vertices[(i - 1) % self.size]

    def edge_vector(self, i: int) -> Vec:
        """e(i+1/2) = P_{i+1} - P_i."""
        return self.vertex(i + 1) - self.vertex(i)

    def edge_segment(self, i: int) -> Segment:
        return Segment(self.vertex(i), self.vertex(i + 1))

    def edge_line(self, i: int) -> Line:
        return Line(self.vertex(i), self.edge_vector(i))

    def diagonal(self, i: int) -> Line:
        """Great diagonal d_i through P_i and P_{i+n}."""
        return Line(self.vertex(i), self.vertex(i + self.n) - self.vertex(i))

    def diagonal_midpoint(self, i: int) -> Vec:
        """M_i = (P_i + P_{i+n})/2."""
        return midpoint(self.vertex(i), self.vertex(i + self.n))

    def mid_parallel(self, i: int) -> Line:
        """m(i+1/2): line through M_i parallel to edge i."""
        return Line(self.diagonal_midpoint(i), self.edge_vector(i))

    def area(self) -> Fraction:
        return polygon_area(self.vertices)

    def contains(self, p: Vec) -> int:
        """+1 inside, 0 boundary, -1 outside."""
        return point_in_convex(self.vertices, p)

    def translate(self, d: Vec) -> "CposPolygon":
        return CposPolygon(tuple(v + d for v in self.vertices))

    def to_json(self) -> dict:
        return {"vertices": [v.to_json() for v in self.vertices]}

    @staticmethod
    def from_json(doc) -> "CposPolygon":
        if not isinstance(doc, dict) or "vertices" not in doc:
            raise CposError("BadDocument", 'polygon document needs a "vertices" key')
        pts = [Vec.from_json(v) for v in doc["vertices"]]
        return validate(pts)


def validate(points) -> CposPolygon:
    """Check the three CPOS invariant families; reject with the first violation.

    Rejections carry a kind (OddCount, TooSmall, WrongOrientation,
    NotConvex, NotParallelOpposite) and the 1-based offending index.
    """
    pts = tuple(points)
    m = len(pts)
    if m % 2 != 0:
        raise ValidationError("OddCount", f"vertex count {m} is odd")
    if m < 6:
        raise ValidationError("TooSmall", f"need at least 6 vertices, got {m}")
    n = m // 2
    edges = [pts[(i + 1) % m] - pts[i] for i in range(m)]
    for i, e in enumerate(edges):
        if e.is_zero():
            raise ValidationError("NotConvex", "zero-length edge", index=i + 1)
    turns = [sign(cross(edges[i], edges[(i + 1) % m])) for i in range(m)]
    if all(t < 0 for t in turns):
        raise ValidationError("WrongOrientation", "clockwise orientation")
    for i, t in enumerate(turns):
        if t <= 0:
            raise ValidationError("NotConvex", "non-convex or collinear corner", index=i + 1)
    for i in range(n):
        if cross(edges[(i + n) % m], edges[i]) != 0:
            raise ValidationError("NotParallelOpposite", "opposite sides not parallel", index=i + 1)
    return CposPolygon(pts)


def is_symmetric(p: CposPolygon) -> Vec | None:
    """Center O with P_{i+n} - O = O - P_i for all i, or None."""
    n = p.n
    total = p.vertex(1) + p.vertex(1 + n)
    for i in range(2, n + 1):
        if p.vertex(i) + p.vertex(i + n) != total:
            return None
    return Vec(total.x / 2, total.y / 2)


def is_equal_area(p: CposPolygon) -> bool:
    """True iff [P_{i+1}-P_i, P_i-P_{i-1}] is the same rational for all i."""
    m = p.size
    first = cross(p.edge_vector(1), p.edge_vector(0))
    return all(cross(p.edge_vector(i), p.edge_vector(i - 1)) == first for i in range(2, m + 1))


def classify_equal_area(p: CposPolygon) -> dict:
    """For an equal-area polygon, recover the side-multiplier structure.

    Sides satisfy e_{n+i} = -alpha_i * e_i with alpha_{i+1} = 1/alpha_i.
    Returns {"equal_area", "symmetric", "alpha", "n_odd"}; alpha is the
    multiplier at index 1 (1 exactly for the symmetric case).
    """
    if not is_equal_area(p):
        return {"equal_area": False, "symmetric": False, "alpha": None, "n_odd": p.n % 2 == 1}
    n = p.n
    alphas = []
    for i in range(1, n + 1):
        e = p.edge_vector(i)
        eo = p.edge_vector(i + n)
        # eo = -alpha * e exactly (parallel by validation)
        alpha = -(eo.x / e.x) if e.x != 0 else -(eo.y / e.y)
        alphas.append(alpha)
    symmetric = all(a == 1 for a in alphas)
    return {
        "equal_area": True,
        "symmetric": symmetric,
        "alpha": alphas[0],
        "n_odd": n % 2 == 1,
    }


def make_equal_area_nonsymmetric(w, alpha, base: Vec = Vec.of(0, 0)) -> CposPolygon:
    """Build the equal-area CPOS 2n-gon with sides w_i / -alpha*w_i interleaved.

    Requires n odd >= 3, [w_i, w_{i+1}] < 0 cyclically, sum(w_i) = 0 and
    alpha > 0.  alpha = 1 degenerates to a symmetric polygon.
    """
    w = [v if isinstance(v, Vec) else Vec.of(*v) for v in w]
    alpha = rat(alpha)
    n = len(w)
    if n < 3 or n % 2 == 0:
        raise CposError("EvenN", "construction requires odd n >= 3")
    if alpha <= 0:
        raise CposError("BadAlpha", "alpha must be positive")
    total = Vec.of(0, 0)
    for v in w:
        total = total + v
    if not total.is_zero():
        raise CposError("NotClosed", "direction vectors must sum to zero")
    brackets = [cross(w[i], w[(i + 1) % n]) for i in range(n)]
    for i, b in enumerate(brackets):
        if b >= 0:
            raise CposError("BadTurning", "[w_i, w_{i+1}] must be negative", index=i + 1)
    # all cyclic brackets must agree, otherwise the result is not equal-area
    if any(b != brackets[0] for b in brackets):
        raise CposError("UnequalBrackets", "[w_i, w_{i+1}] must be the same for all i")
    sides = []
    for i in range(1, n + 1):  # e_i for i = 1..n
        sides.append(w[i - 1] if i % 2 == 1 else w[i - 1].scale(-alpha))
    for i in range(1, n + 1):  # e_{n+i}
        sides.append(w[i - 1].scale(-alpha) if i % 2 == 1 else w[i - 1])
    verts = [base]
    for s in sides[:-1]:
        verts.append(verts[-1] + s)
    return validate(verts)


def _tan_half_direction(k: int, denom: int = 64) -> Vec:
    """Rational unit-circle direction for tan-half parameter k/denom."""
    return Vec(Fraction(denom * denom - k * k), Fraction(2 * denom * k))


def random_cpos(n: int, seed: int) -> CposPolygon:
    """Deterministic random CPOS 2n-gon.

    Samples n cyclically ordered rational directions and 2n positive lengths,
    then projects the lengths onto the closure subspace (two linear
    constraints); resamples on positivity failure.
    """
    if n < 3:
        raise CposError("TooSmall", "need n >= 3")
    rng = random.Random(seed)
    for _ in range(1000):
        ks = sorted(rng.sample(range(-60, 61), n))
        dirs = [_tan_half_direction(k) for k in ks]
        lengths = [Fraction(rng.randint(4, 24), rng.randint(1, 4)) for _ in range(2 * n)]
        # closure: sum(t_i w_i) - sum(s_i w_i) = 0; columns are +w_i then -w_i
        cols = [(d.x, d.y) for d in dirs] + [(-d.x, -d.y) for d in dirs]
        rx = sum(c[0] * g for c, g in zip(cols, lengths))
        ry = sum(c[1] * g for c, g in zip(cols, lengths))
        # g' = g - A^T (A A^T)^{-1} (A g), A the 2 x 2n closure matrix
        a11 = sum(c[0] * c[0] for c in cols)
        a12 = sum(c[0] * c[1] for c in cols)
        a22 = sum(c[1] * c[1] for c in cols)
        det = a11 * a22 - a12 * a12
        if det == 0:
            continue
        lx = (a22 * rx - a12 * ry) / det
        ly = (a11 * ry - a12 * rx) / det
        adjusted = [g - (c[0] * lx + c[1] * ly) for c, g in zip(cols, lengths)]
        if any(g <= 0 for g in adjusted):
            continue
        sides = [dirs[i].scale(adjusted[i]) for i in range(n)]
        sides += [dirs[i].scale(-adjusted[n + i]) for i in range(n)]
        verts = [Vec.of(0, 0)]
        for s in sides[:-1]:
            verts.append(verts[-1] + s)
        try:
            return validate(verts)
        except ValidationError:
            continue
    raise CposError("NotFound", f"no valid polygon after 1000 attempts (n={n}, seed={seed})")
