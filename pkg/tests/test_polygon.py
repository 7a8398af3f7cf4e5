from fractions import Fraction

import pytest

from cpos.errors import CposError, ValidationError
from cpos.kernel import Vec, cross
from cpos.polygon import (
    classify_equal_area,
    is_equal_area,
    is_symmetric,
    make_equal_area_nonsymmetric,
    random_cpos,
    validate,
)

from conftest import HEX_EA2_POINTS, HEX_SYM_POINTS, ensemble, mk


def V(x, y):
    return Vec.of(x, y)


def test_validate_fixtures():
    assert mk(HEX_SYM_POINTS).n == 3
    p = mk(HEX_EA2_POINTS)
    edges = [p.edge_vector(i) for i in range(1, 7)]
    assert edges == [V(1, 0), V(0, 2), V(-1, 1), V(-2, 0), V(0, -1), V(2, -2)]


def test_validate_rejections():
    with pytest.raises(ValidationError) as e:
        validate([V(0, 0), V(1, 0), V(1, 1), V(0, 1)])
    assert e.value.kind == "TooSmall"
    with pytest.raises(ValidationError) as e:
        validate([V(0, 0), V(1, 0), V(0, 1)])
    assert e.value.kind == "OddCount"
    with pytest.raises(ValidationError) as e:
        validate([V(x, -y) for x, y in HEX_SYM_POINTS])  # mirrored: clockwise
    assert e.value.kind == "WrongOrientation"
    # break one opposite-parallel pair, keep convexity
    pts = [V(2, 0), V(1, 2), V(-1, 2), V(-2, 0), V(-1, -2), V("2/3", -2)]
    with pytest.raises(ValidationError) as e:
        validate(pts)
    assert e.value.kind in ("NotParallelOpposite", "NotConvex")
    # collinear adjacent edges
    with pytest.raises(ValidationError) as e:
        validate([V(0, 0), V(1, 0), V(2, 0), V(2, 1), V(1, 1), V(0, 1)])
    assert e.value.kind == "NotConvex"


def test_is_symmetric(hex_sym, hex_ea2):
    assert is_symmetric(hex_sym) == V(0, 0)
    assert is_symmetric(hex_ea2) is None
    shifted = hex_sym.translate(V(5, 7))
    assert is_symmetric(shifted) == V(5, 7)


def test_is_equal_area(hex_sym, hex_ea2):
    assert is_equal_area(hex_ea2)
    # every symmetric CPOS polygon is equal-area: all brackets equal exactly
    brackets = {cross(hex_sym.edge_vector(i), hex_sym.edge_vector(i - 1)) for i in range(1, 7)}
    assert len(brackets) == 1
    assert is_equal_area(hex_sym)


def test_equal_area_affine_invariance(hex_ea2):
    a, b, c, d = map(Fraction, (2, 1, 0, 1))  # shear * scale
    pts = [V(a * v.x + b * v.y, c * v.x + d * v.y) for v in hex_ea2.vertices]
    assert is_equal_area(validate(pts))


def test_classification(hex_sym, hex_ea2):
    cls = classify_equal_area(hex_ea2)
    assert cls["equal_area"] and not cls["symmetric"]
    assert cls["alpha"] == 2 and cls["n_odd"]
    cls = classify_equal_area(hex_sym)
    assert cls["symmetric"] and cls["alpha"] == 1


def test_construction_recovers_fixture(hex_ea2):
    w = [V(1, 0), V(0, -1), V(-1, 1)]
    p = make_equal_area_nonsymmetric(w, 2, V(0, 0))
    assert p.vertices == hex_ea2.vertices
    assert is_equal_area(p)


def test_construction_alpha_one_is_symmetric():
    w = [V(1, 0), V(0, -1), V(-1, 1)]
    p = make_equal_area_nonsymmetric(w, 1, V(0, 0))
    assert is_symmetric(p) is not None


def test_construction_rejects_even_n():
    w = [V(1, 0), V(0, -1), V(-1, 0), V(0, 1)]
    with pytest.raises(CposError) as e:
        make_equal_area_nonsymmetric(w, 2, V(0, 0))
    assert e.value.kind == "EvenN"


def test_construction_precondition_checks():
    with pytest.raises(CposError):
        make_equal_area_nonsymmetric([V(1, 0), V(0, 1), V(-1, -1)], 2, V(0, 0))  # wrong turning
    with pytest.raises(CposError):
        make_equal_area_nonsymmetric([V(1, 0), V(0, -1), V(-2, 1)], 2, V(0, 0))  # not closed


def test_construction_validates_for_many_inputs():
    # alpha sweep on sheared triangle-fan directions (equal cyclic brackets)
    for w in ([V(1, 0), V(0, -1), V(-1, 1)],
              [V(2, 1), V(-1, -2), V(-1, 1)],
              [V(3, 0), V(-2, -2), V(-1, 2)]):
        for alpha in (Fraction(1, 3), Fraction(1, 2), 1, 2, Fraction(7, 2)):
            p = make_equal_area_nonsymmetric(w, alpha, V(3, -1))
            assert is_equal_area(p)
            assert (is_symmetric(p) is not None) == (alpha == 1)


def test_construction_rejects_unequal_brackets():
    # closed, negatively turning, but with unequal brackets: the result
    # would not be equal-area, so the constructor refuses
    w = [V(2, 0), V(1, -2), V(-1, -1), V(-3, 1), V(1, 2)]
    with pytest.raises(CposError) as e:
        make_equal_area_nonsymmetric(w, 2, V(0, 0))
    assert e.value.kind == "UnequalBrackets"


def test_random_cpos_deterministic():
    a = random_cpos(5, 7)
    b = random_cpos(5, 7)
    assert a.vertices == b.vertices
    assert random_cpos(3, 42).n == 3


def test_random_cpos_ensemble_validates():
    for p in ensemble(120, seed0=500):
        assert p.n >= 3  # construction already passed validate


def test_operations_commute_with_translation():
    p = random_cpos(4, 9)
    d = V("7/3", -2)
    q = p.translate(d)
    assert is_equal_area(p) == is_equal_area(q)
    s = is_symmetric(p)
    assert (s is None) == (is_symmetric(q) is None)


def test_polygon_json_roundtrip(hex_ea2):
    doc = hex_ea2.to_json()
    from cpos.polygon import CposPolygon

    p = CposPolygon.from_json(doc)
    assert p.vertices == hex_ea2.vertices
    assert doc["vertices"][0] == ["0", "0"]
