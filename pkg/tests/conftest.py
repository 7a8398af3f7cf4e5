import pytest

from cpos.kernel import Vec
from cpos.polygon import CposPolygon, random_cpos, validate

# Hexagon with a point symmetry at the origin.
HEX_SYM_POINTS = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]

# Non-symmetric equal-area hexagon (alpha = 2 construction).
HEX_EA2_POINTS = [(0, 0), (1, 0), (1, 2), (0, 3), (-2, 3), (-2, 2)]


def mk(points) -> CposPolygon:
    return validate([Vec.of(x, y) for x, y in points])


@pytest.fixture
def hex_sym() -> CposPolygon:
    return mk(HEX_SYM_POINTS)


@pytest.fixture
def hex_ea2() -> CposPolygon:
    return mk(HEX_EA2_POINTS)


def ensemble(count: int, seed0: int = 1000, ns=(3, 4, 5, 6, 7, 8)):
    """Deterministic list of random polygons cycling through the given n."""
    out = []
    for k in range(count):
        n = ns[k % len(ns)]
        out.append(random_cpos(n, seed0 + k))
    return out
