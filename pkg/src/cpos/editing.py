"""Vertex dragging: project a moved vertex back onto the CPOS class.

Edge directions are preserved; the 2n length factors are re-solved in exact
least squares subject to the closure constraint, with the dragged vertex
pinned to the target and the vertex one past its opposite anchored (an
anchor adjacent to the dragged vertex would over-constrain, and the exactly
opposite anchor makes the program swap-invariant, so symmetric polygons
would never bloom under dragging).  If any factor would fall below 1/1024
the solution is pulled back along the straight line toward the identity and
flagged clamped.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CposError
from .kernel import Vec, solve_linear
from .polygon import CposPolygon, validate

_FLOOR = Fraction(1, 1024)


def project_vertex(p: CposPolygon, k: int, target: Vec) -> tuple[CposPolygon, bool]:
    """Nearest valid polygon (in length factors) with vertex k at ``target``.

    Returns (polygon, clamped).  Raises on an unreachable target (singular
    constraint system, e.g. target colinear with the anchor in a degenerate
    way)."""
    m = p.size
    n = p.n
    if not (1 <= k <= m):
        raise CposError("BadVertexIndex", f"vertex index must be in 1..{m}")
    deltas = [p.edge_vector(i) for i in range(1, m + 1)]
    anchor_idx = (k + n + 1 - 1) % m + 1
    anchor = p.vertex(anchor_idx)
    # edges on the ccw path anchor -> dragged vertex
    steps = (k - anchor_idx) % m
    path = [(anchor_idx + j - 1) % m for j in range(steps)]  # 0-based edge ids
    rows = [
        [deltas[i].x for i in range(m)],
        [deltas[i].y for i in range(m)],
        [deltas[i].x if i in set(path) else Fraction(0) for i in range(m)],
        [deltas[i].y if i in set(path) else Fraction(0) for i in range(m)],
    ]
    b = [Fraction(0), Fraction(0), target.x - anchor.x, target.y - anchor.y]
    # minimize sum (f_i - 1)^2 s.t. A f = b  =>  f = 1 - A^T lam / 2
    a1 = [sum(row) for row in rows]  # A * ones
    gram = [[sum(rows[r][i] * rows[s][i] for i in range(m)) for s in range(4)] for r in range(4)]
    rhs = [2 * (a1[r] - b[r]) for r in range(4)]
    lam = solve_linear(gram, rhs)
    f = [1 - sum(rows[r][i] * lam[r] for r in range(4)) / 2 for i in range(m)]
    theta = Fraction(1)
    for fi in f:
        if fi < _FLOOR:
            theta = min(theta, (1 - _FLOOR) / (1 - fi))
    clamped = theta < 1
    f = [1 + theta * (fi - 1) for fi in f]
    verts: dict[int, Vec] = {anchor_idx: anchor}
    cur = anchor
    for j in range(m - 1):
        e = (anchor_idx + j - 1) % m  # 0-based edge id leaving current vertex
        cur = cur + deltas[e].scale(f[e])
        verts[(anchor_idx + j) % m + 1] = cur
    ordered = [verts[i] for i in range(1, m + 1)]
    return validate(ordered), clamped
