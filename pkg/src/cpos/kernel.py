"""Exact rational planar geometry primitives.

Every coordinate is a ``fractions.Fraction``; all predicates (orientation,
incidence, containment) are therefore exact.  Floats appear only at the
SVG/JSON display boundary, never here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import CposError

Rational = Fraction
RationalInput = Union[Fraction, int, str]


def rat(value: RationalInput) -> Fraction:
    """Parse a rational from an int, Fraction, or string.

    Strings may be "p/q", plain integers, or decimal literals; decimals are
    exact ("0.25" -> 1/4), never floats.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise CposError("BadRational", f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise CposError("BadRational", f"cannot parse rational {value!r}") from exc
    raise CposError("BadRational", f"not a rational: {value!r}")


def rat_str(q: Fraction) -> str:
    """Canonical serialization: "p" for integers, "p/q" otherwise."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign(q: Fraction) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


@dataclass(frozen=True, slots=True)
class Vec:
    """A point or vector in the rational plane (Point - Point = Vector)."""

    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: RationalInput, y: RationalInput) -> "Vec":
        return Vec(rat(x), rat(y))

    def __add__(self, other: "Vec") -> "Vec":
        return Vec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec") -> "Vec":
        return Vec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec":
        return Vec(-self.x, -self.y)

    def scale(self, k: RationalInput) -> "Vec":
        k = rat(k)
        return Vec(self.x * k, self.y * k)

    __mul__ = scale
    __rmul__ = scale

    def cross(self, other: "Vec") -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Vec") -> Fraction:
        return self.x * other.x + self.y * other.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def to_json(self) -> list[str]:
        return [rat_str(self.x), rat_str(self.y)]

    @staticmethod
    def from_json(arr) -> "Vec":
        if not isinstance(arr, (list, tuple)) or len(arr) != 2:
            raise CposError("BadPoint", f"point must be a 2-element array: {arr!r}")
        return Vec(rat(arr[0]), rat(arr[1]))

    def __repr__(self) -> str:  # keeps pytest output readable
        return f"({rat_str(self.x)}, {rat_str(self.y)})"


Point = Vec
Vector = Vec


def cross(u: Vec, v: Vec) -> Fraction:
    """The 2x2 determinant [u, v] = u.x*v.y - u.y*v.x."""
    return u.cross(v)


def dot(u: Vec, v: Vec) -> Fraction:
    return u.dot(v)


def midpoint(a: Vec, b: Vec) -> Vec:
    return Vec((a.x + b.x) / 2, (a.y + b.y) / 2)


@dataclass(frozen=True, slots=True)
class Line:
    """base + t*dir, dir != 0."""

    base: Vec
    dir: Vec

    def __post_init__(self):
        if self.dir.is_zero():
            raise CposError("ZeroDirection", "line direction must be nonzero")

    def at(self, t: RationalInput) -> Vec:
        return self.base + self.dir.scale(t)

    def contains(self, p: Vec) -> bool:
        return cross(self.dir, p - self.base) == 0

    def side_of(self, p: Vec) -> int:
        """+1 left of dir, -1 right, 0 on the line."""
        return sign(cross(self.dir, p - self.base))


@dataclass(frozen=True, slots=True)
class Segment:
    a: Vec
    b: Vec

    @property
    def direction(self) -> Vec:
        return self.b - self.a

    def is_degenerate(self) -> bool:
        return self.a == self.b

    def canonical(self) -> tuple:
        """Order-independent key for set comparisons."""
        ka = (self.a.x, self.a.y)
        kb = (self.b.x, self.b.y)
        return (ka, kb) if ka <= kb else (kb, ka)

    def to_json(self) -> list:
        return [self.a.to_json(), self.b.to_json()]


def line_intersect(l1: Line, l2: Line) -> Vec | None:
    """Unique intersection point, or None for parallel lines.

    Callers distinguish coincident from disjoint parallels via
    ``lines_collinear``.
    """
    denom = cross(l1.dir, l2.dir)
    if denom == 0:
        return None
    t = cross(l2.base - l1.base, l2.dir) / denom
    return l1.at(t)


def lines_collinear(l1: Line, l2: Line) -> bool:
    return cross(l1.dir, l2.dir) == 0 and l1.contains(l2.base)


def segment_param(line: Line, p: Vec) -> Fraction:
    """t with p = base + t*dir; p must lie on the line exactly."""
    if not line.contains(p):
        raise CposError("NotOnLine", f"point {p} is not on the line")
    d = line.dir
    return dot(p - line.base, d) / dot(d, d)


def polygon_area(pts: Sequence[Vec]) -> Fraction:
    """Signed shoelace area; positive for counterclockwise order."""
    if len(pts) < 3:
        raise CposError("TooFewPoints", "polygon area needs at least 3 points")
    total = Fraction(0)
    m = len(pts)
    for i in range(m):
        a = pts[i]
        b = pts[(i + 1) % m]
        total += a.cross(b)
    return total / 2


def point_on_segment(p: Vec, seg: Segment) -> bool:
    """Exact closed-segment membership."""
    d = seg.direction
    if d.is_zero():
        return p == seg.a
    if cross(d, p - seg.a) != 0:
        return False
    t = dot(p - seg.a, d)
    return 0 <= t <= dot(d, d)


def segment_intersection(s1: Segment, s2: Segment):
    """Exact segment intersection.

    Returns None, ("point", Vec) for a single shared point, or
    ("overlap", Segment) for a collinear overlap of positive length.
    """
    d1, d2 = s1.direction, s2.direction
    denom = cross(d1, d2)
    if denom != 0:
        t = cross(s2.a - s1.a, d2) / denom
        u = cross(s2.a - s1.a, d1) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            return ("point", s1.a + d1.scale(t))
        return None
    # parallel
    if cross(d1, s2.a - s1.a) != 0:
        return None
    # collinear: project on d1 (s1 may be degenerate)
    if d1.is_zero():
        if point_on_segment(s1.a, s2):
            return ("point", s1.a)
        return None
    dd = dot(d1, d1)
    t0 = Fraction(0)
    t1 = Fraction(1)
    u0 = dot(s2.a - s1.a, d1) / dd
    u1 = dot(s2.b - s1.a, d1) / dd
    lo, hi = min(u0, u1), max(u0, u1)
    lo, hi = max(lo, t0), min(hi, t1)
    if lo > hi:
        return None
    if lo == hi:
        return ("point", s1.a + d1.scale(lo))
    return ("overlap", Segment(s1.a + d1.scale(lo), s1.a + d1.scale(hi)))


def point_in_convex(pts: Sequence[Vec], p: Vec) -> int:
    """+1 strictly inside, 0 on the boundary, -1 outside (pts convex ccw)."""
    m = len(pts)
    on_boundary = False
    for i in range(m):
        a = pts[i]
        b = pts[(i + 1) % m]
        s = sign(cross(b - a, p - a))
        if s < 0:
            return -1
        if s == 0:
            if point_on_segment(p, Segment(a, b)):
                on_boundary = True
            else:
                return -1
    return 0 if on_boundary else 1


def solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Exact Gaussian elimination; raises on a singular system."""
    m = len(rows)
    if m == 0:
        return []
    width = len(rows[0])
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    if m != width:
        raise CposError("SingularMatrix", "solve_linear needs a square system")
    for col in range(width):
        piv = next((r for r in range(col, m) if aug[r][col] != 0), None)
        if piv is None:
            raise CposError("SingularMatrix", "singular linear system")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][width] for r in range(m)]


def parse_point(arr) -> Vec:
    return Vec.from_json(arr)


def points_to_json(pts: Iterable[Vec]) -> list[list[str]]:
    return [p.to_json() for p in pts]
