"""Great diagonals, the area evolute, the central symmetry set, and cusps.

The area evolute (AE) is the closed chain of diagonal midpoints M_i; the
central symmetry set (CSS) is the closed chain of consecutive-diagonal
intersections D(i+1/2) = d_i ∩ d_{i+1}.  Cusp classification rides on the
lambda parameters of the D points along their diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CposError
from .kernel import Line, Vec, line_intersect, segment_param
from .polygon import CposPolygon, classify_equal_area, is_equal_area, is_symmetric


@dataclass(frozen=True)
class DiagonalFrame:
    """Per-index bundle: diagonal d_i, midpoint M_i, flanking CSS points, lambdas."""

    index: int
    diagonal: Line
    mid: Vec
    css_prev: Vec          # D(i-1/2)
    css_next: Vec          # D(i+1/2)
    lambda_next: Fraction  # lambda(i+1/2)
    lambda_hat_next: Fraction  # lambda(i+1/2) - 1/2


@dataclass
class PolyChain:
    """Ordered chain of points with optional per-vertex cusp flags.

    ``cusp_flags`` is None when classification was withheld (degenerate
    input); ``degenerate`` then carries the diagnostic ("point", "css",
    "plateau").
    """

    points: list[Vec]
    closed: bool = True
    cusp_flags: list[bool] | None = None
    degenerate: str | None = None

    def to_json(self) -> dict:
        doc: dict = {
            "points": [p.to_json() for p in self.points],
            "closed": self.closed,
            "cusps": self.cusp_flags,
        }
        if self.degenerate:
            doc["degenerate"] = self.degenerate
        return doc


def diagonal_frames(p: CposPolygon) -> list[DiagonalFrame]:
    """Frames i = 1..n with exact CSS points and lambda parameters."""
    n = p.n
    css: list[Vec] = []
    for i in range(1, n + 1):
        pt = line_intersect(p.diagonal(i), p.diagonal(i + 1))
        if pt is None:
            raise CposError("AdjacentDiagonalsParallel", "adjacent great diagonals are parallel", index=i)
        css.append(pt)
    frames = []
    for i in range(1, n + 1):
        d = p.diagonal(i)
        nxt = css[i - 1]
        prev = css[(i - 2) % n]
        lam = segment_param(Line(p.vertex(i), p.vertex(i + n) - p.vertex(i)), nxt)
        frames.append(
            DiagonalFrame(
                index=i,
                diagonal=d,
                mid=p.diagonal_midpoint(i),
                css_prev=prev,
                css_next=nxt,
                lambda_next=lam,
                lambda_hat_next=lam - Fraction(1, 2),
            )
        )
    return frames


def lambda_cycle(p: CposPolygon, frames: list[DiagonalFrame] | None = None) -> list[Fraction]:
    """lambda(i+1/2) for i = 1..2n; entry i+n is 1 - entry i."""
    if frames is None:
        frames = diagonal_frames(p)
    lams = [f.lambda_next for f in frames]
    return lams + [1 - v for v in lams]


def css_point(p: CposPolygon, i: int, frames: list[DiagonalFrame] | None = None) -> Vec:
    """D(i+1/2) for any cyclic i (period n as a point)."""
    if frames is None:
        frames = diagonal_frames(p)
    return frames[(i - 1) % p.n].css_next


def area_evolute(p: CposPolygon) -> PolyChain:
    """Closed chain M_1..M_n; M_i is a cusp iff the centered lambdas flanking
    it have opposite signs."""
    center = is_symmetric(p)
    if center is not None:
        return PolyChain(points=[center], closed=True, cusp_flags=[], degenerate="point")
    frames = diagonal_frames(p)
    n = p.n
    pts = [f.mid for f in frames]
    for i in range(1, n + 1):
        if frames[i - 1].css_prev == frames[i - 1].css_next:
            return PolyChain(points=pts, closed=True, cusp_flags=None, degenerate="css")
    lams = lambda_cycle(p, frames)

    def lam_hat(i: int) -> Fraction:
        return lams[(i - 1) % (2 * n)] - Fraction(1, 2)

    if any(lam_hat(i) == 0 for i in range(1, 2 * n + 1)):
        return PolyChain(points=pts, closed=True, cusp_flags=None, degenerate="plateau")
    flags = [lam_hat(i - 1) * lam_hat(i) < 0 for i in range(1, n + 1)]
    return PolyChain(points=pts, closed=True, cusp_flags=flags)


def central_symmetry_set(p: CposPolygon) -> PolyChain:
    """Closed chain D(1/2)..D(n-1/2); cusps at strict local extrema of the
    cyclic lambda sequence."""
    center = is_symmetric(p)
    if center is not None:
        return PolyChain(points=[center], closed=True, cusp_flags=[], degenerate="point")
    frames = diagonal_frames(p)
    n = p.n
    # chain starts at D(1/2) = D(n+1/2) to match the 1-based labels
    pts = [css_point(p, i, frames) for i in range(0, n)]
    lams = lambda_cycle(p, frames)

    def lam(i: int) -> Fraction:
        return lams[(i - 1) % (2 * n)]

    if any(lam(i) == lam(i + 1) for i in range(1, 2 * n + 1)):
        return PolyChain(points=pts, closed=True, cusp_flags=None, degenerate="plateau")
    flags = []
    for k in range(0, n):  # vertex D(k+1/2): extremum of lam(k+1/2) vs neighbors
        prev, cur, nxt = lam(k - 1), lam(k), lam(k + 1)
        flags.append((prev < cur > nxt) or (prev > cur < nxt))
    return PolyChain(points=pts, closed=True, cusp_flags=flags)


def nonsymmetric_equal_area_midpoint_check(p: CposPolygon) -> dict:
    """For a non-symmetric equal-area polygon, M_i bisects D(i-1/2)D(i+1/2).

    Verifies 2*M_i = D(i-1/2) + D(i+1/2) for all i and that every
    |lambda - 1/2| equals the predicted offset (alpha-1)/(2*(1+alpha)).
    """
    if is_symmetric(p) is not None:
        raise CposError("SymmetricInput", "polygon is symmetric")
    if not is_equal_area(p):
        raise CposError("NotEqualArea", "polygon is not equal-area")
    cls = classify_equal_area(p)
    alpha = cls["alpha"]
    lam_tilde = abs(alpha - 1) / (2 * (1 + alpha))
    frames = diagonal_frames(p)
    midpoint_ok = all(f.css_prev + f.css_next == f.mid + f.mid for f in frames)
    lams = lambda_cycle(p, frames)
    offsets_ok = all(abs(v - Fraction(1, 2)) == lam_tilde for v in lams)
    return {
        "midpoint_property": midpoint_ok,
        "offsets_match": offsets_ok,
        "ok": midpoint_ok and offsets_ok,
        "alpha": alpha,
        "lambda_tilde": lam_tilde,
    }
