import pickle
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tripts.geometry import (
    SQRT3,
    ConeIndex,
    ExactScalar,
    GeneralPositionError,
    Point,
    PointSet,
    classify_cone,
    general_position,
    projection_length,
    scalar_sign,
    sextant,
    smallest_triangle,
    triangle_contains,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
scalars = st.builds(ExactScalar, rationals, rationals)


def P(x, y, i=-1):
    return Point(x, y, i)


@pytest.mark.parametrize("a,b,expected", [(0, 0, 0), (-5, 3, 1), (2, -1, 1), (5, -3, -1), (-2, 1, -1), (0, -1, -1)])
def test_sign_examples(a, b, expected):
    assert scalar_sign(ExactScalar(a, b)) == expected


@given(scalars)
def test_sign_matches_float_away_from_zero(s):
    f = float(s)
    if abs(f) > 1e-9:
        assert s.sign() == (1 if f > 0 else -1)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ExactScalar(0)
    if b != 0:
        assert (a / b) * b == a


@given(scalars, scalars)
def test_order_is_total_and_consistent(a, b):
    assert (a < b) + (a == b) + (a > b) == 1
    assert (a < b) == ((b - a).sign() > 0)


def test_sqrt3_squared():
    assert SQRT3 * SQRT3 == 3
    assert hash(ExactScalar(Fraction(1, 2))) == hash(Fraction(1, 2))


def test_immutable_and_picklable():
    s = ExactScalar(1, 2)
    with pytest.raises(AttributeError):
        s.rational_part = 3
    assert pickle.loads(pickle.dumps(s)) == s


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        ExactScalar(1) / ExactScalar(0)


def test_general_position_examples():
    assert general_position([P(0, 0), P(1, 0)]) == (False, (0, 1))
    assert general_position([P(0, 0), P(ExactScalar(1), ExactScalar(0, 1))])[0] is False
    assert general_position([P(0, 0), P(2, 1), P(5, 3)]) == (True, None)


def test_general_position_120_degrees():
    # direction (-1, sqrt 3) is at 120 degrees
    assert general_position([P(0, 0), P(-1, SQRT3)])[0] is False
    assert general_position([P(0, 0), P(-1, SQRT3 + 1)])[0] is True


def test_pointset_rejects_duplicates_and_degenerate():
    with pytest.raises(GeneralPositionError) as exc:
        PointSet([(0, 0), (0, 0)])
    assert "duplicate" in str(exc.value)
    with pytest.raises(GeneralPositionError):
        PointSet([(0, 0), (3, 0)])
    ps = PointSet([(0, 0), (3, 0)], certify=False)
    assert not ps.certified_general_position


def test_lattice_scaling():
    ps = PointSet([(Fraction(1, 2), Fraction(1, 3)), (2, 1)])
    X, Y = ps.lattice
    assert list(X) == [3, 12] and list(Y) == [2, 6]
    assert PointSet([(SQRT3, 1), (0, 0)]).lattice is None


def test_large_lattice_uses_python_ints():
    ps = PointSet([(1 << 40, 1), (0, 0)])
    assert ps.lattice[0].dtype == object


def test_without_keeps_labels():
    ps = PointSet([(0, 0), (1, 2), (3, 5)], labels=["a", "b", "c"])
    q = ps.without(["b"])
    assert q.labels == ("a", "c") and len(q) == 2 and q[1].id == 1


@pytest.mark.parametrize(
    "apex,other,cone",
    [((0, 0), (2, 1), ("positive", 1)), ((2, 1), (0, 0), ("negative", 1)), ((0, 0), (-3, 1), ("positive", 2))],
)
def test_classify_cone_examples(apex, other, cone):
    assert classify_cone(P(*apex), P(*other)) == ConeIndex(*cone)


def test_cone_layout():
    # C_i = A_{2i-1}; opposite cones are A_4, A_6, A_2
    assert [ConeIndex("positive", i).sextant for i in (1, 2, 3)] == [1, 3, 5]
    assert [ConeIndex("negative", i).sextant for i in (1, 2, 3)] == [4, 6, 2]
    assert sextant(1, 0) == 0 and sextant(0, 0) == 0 and sextant(1, SQRT3) == 0


def test_classify_boundary_raises():
    with pytest.raises(GeneralPositionError):
        classify_cone(P(0, 0), P(1, 0))


def test_projection_examples():
    assert projection_length(P(0, 0), P(SQRT3, 1), ConeIndex("positive", 1)) == 2
    assert projection_length(P(0, 0), P(2, 1), ConeIndex("positive", 1)) == ExactScalar(Fraction(1, 2), 1)
    with pytest.raises(ValueError):
        projection_length(P(0, 0), P(2, 1), ConeIndex("positive", 2))


@given(rationals, rationals, rationals, rationals)
def test_projection_symmetry(x1, y1, x2, y2):
    p, q = P(x1, y1), P(x2, y2)
    k = sextant(q.x - p.x, q.y - p.y)
    if k == 0:
        return
    c = ConeIndex.from_sextant(k)
    assert projection_length(p, q, c) == projection_length(q, p, c.opposite())
    assert projection_length(p, q, c) > 0


def test_smallest_triangle_examples():
    t = smallest_triangle(P(0, 0), P(0, 0), "down")
    assert t.is_degenerate()
    t = smallest_triangle(P(0, 0), P(2, 1), "down")
    assert t.support[0] == 1
    assert not triangle_contains(t, P(100, 100))


@given(rationals, rationals, rationals, rationals, st.sampled_from(["down", "up"]))
def test_smallest_triangle_is_tight(x1, y1, x2, y2, orientation):
    p, q = P(x1, y1), P(x2, y2)
    if (p.x, p.y) == (q.x, q.y) or sextant(q.x - p.x, q.y - p.y) == 0:
        return
    t = smallest_triangle(p, q, orientation)
    assert triangle_contains(t, p) and triangle_contains(t, q)
    assert not triangle_contains(t, p, "interior") and not triangle_contains(t, q, "interior")
    corners = [P(x, y) for x, y in t.corners()]
    # in general position one point is a corner
    assert any(c.same_location(p) or c.same_location(q) for c in corners)
    cx = sum((c.x for c in corners), ExactScalar(0)) / 3
    cy = sum((c.y for c in corners), ExactScalar(0)) / 3
    assert triangle_contains(t, P(cx, cy), "interior")
    for c in corners:
        assert triangle_contains(t, c, "closed") and not triangle_contains(t, c, "interior")


def test_down_triangle_points_down():
    t = smallest_triangle(P(0, 0), P(2, 1), "down")
    ys = sorted(float(c[1]) for c in t.corners())
    # two corners on the top side, apex below
    assert ys[1] == ys[2] == 1.0 and ys[0] < 0
