from fractions import Fraction as F

import pytest
from hypothesis import given

from cubeops.geometry import (
    AffineComponent,
    IDENTITY_COMPONENT,
    NotInImage,
    Rect,
    affine_apply,
    affine_compose,
    affine_invert,
    format_rational,
    interval,
    interval_intersect,
    parse_rational,
    rect,
    rect_center,
    rect_intersect,
)

from strategies import interior_rationals, unit_rationals


def test_interval_intersections():
    assert interval_intersect(interval(0, "1/2"), interval("1/4", "3/4")) == interval("1/4", "1/2")
    shared = interval_intersect(interval(0, "1/2"), interval("1/2", 1))
    assert shared == interval("1/2", "1/2") and shared.degenerate
    assert interval_intersect(interval(0, "1/4"), interval("1/2", 1)) is None


def test_rect_intersections():
    a = rect((0, "1/2"), (0, 1))
    b = rect(("1/4", 1), (0, "1/2"))
    assert rect_intersect(a, b) == rect(("1/4", "1/2"), (0, "1/2"))
    assert rect_intersect(a, a) == a
    assert rect_intersect(rect((0, "1/4"), (0, 1)), rect(("1/2", 1), (0, 1))) is None


def test_centres():
    assert rect_center(rect(("1/4", "3/4"))) == (F(1, 2),)
    assert rect_center(Rect.point((F(1, 3), F(2, 5)))) == (F(1, 3), F(2, 5))
    assert rect_center(rect((0, 1), (0, "1/2"))) == (F(1, 2), F(1, 4))


def test_affine_by_hand():
    c = AffineComponent(F(1, 2), F(1, 4))
    assert affine_apply(c, F(1, 2)) == F(1, 2)
    assert affine_invert(IDENTITY_COMPONENT, F(3, 7)) == F(3, 7)
    left = AffineComponent.from_image(0, "1/2")
    right = AffineComponent.from_image("1/2", 1)
    assert affine_compose(left, right) == AffineComponent(F(1, 4), F(1, 4))


def test_affine_invert_outside_image():
    with pytest.raises(NotInImage):
        affine_invert(AffineComponent(F(1, 4), 0), F(1, 2))


def test_invalid_components():
    with pytest.raises(ValueError):
        AffineComponent(0, 0)
    with pytest.raises(ValueError):
        AffineComponent(F(1, 2), F(3, 4))


def test_rational_io():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational(2) == 2
    assert format_rational(F(6, 4)) == "3/2"
    assert format_rational(F(0)) == "0"
    with pytest.raises(TypeError):
        parse_rational(0.5)


@given(interior_rationals(), interior_rationals(), unit_rationals())
def test_affine_round_trip(a, b, t):
    lo, hi = min(a, b), max(a, b)
    if lo == hi:
        return
    c = AffineComponent.from_image(lo, hi)
    assert affine_invert(c, affine_apply(c, t)) == t


@given(unit_rationals(), unit_rationals(), unit_rationals(), unit_rationals())
def test_intersection_is_commutative_and_inside(a, b, c, d):
    x = interval(min(a, b), max(a, b))
    y = interval(min(c, d), max(c, d))
    z = interval_intersect(x, y)
    assert z == interval_intersect(y, x)
    if z is not None:
        assert x.lo <= z.lo and z.hi <= x.hi and y.lo <= z.lo and z.hi <= y.hi
    else:
        assert x.hi < y.lo or y.hi < x.lo
