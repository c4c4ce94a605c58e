import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from linapps.errors import ParseError, ShapeError
from linapps.geometry import Point, det, tetrahedron_volume, triangle_area
from linapps.transforms import (
    Composite,
    Polytope,
    ReflectionXY,
    Rotation,
    Translation,
    apply,
    apply2,
    apply3,
    apply_polytope,
    compose,
    format_angle,
    linear_part,
    parse_angle,
)

QUAD = [(1, 1), (2, 3), (4, 3), (5, 1)]
TET = [(1, 5, 0), (6, 2, 0), (3, 2, 4), (0, 0, 0)]
p2 = st.tuples(rationals, rationals)
p3 = st.tuples(rationals, rationals, rationals)


def sqdist(a, b):
    return sum((x - y) ** 2 for x, y in zip(a, b))


def transforms2():
    return st.one_of(
        p2.map(Translation), st.integers(0, 7).map(Rotation.quarter)
    )


def transforms3():
    return st.one_of(
        p3.map(Translation),
        st.integers(0, 7).map(lambda k: Rotation.quarter(k, 3)),
        st.just(ReflectionXY()),
    )


def coords(points):
    return [p.coords for p in points]


def test_translation_2d():
    t = Translation((3, 2))
    assert coords(apply2(t, p) for p in QUAD) == [(4, 3), (5, 5), (7, 5), (8, 3)]


def test_rotation_2d():
    r = parse_angle("pi/2")
    assert coords(apply2(r, p) for p in QUAD) == [(-1, 1), (-3, 2), (-3, 4), (-1, 5)]
    assert all(apply2(Rotation.quarter(0), p).coords == p for p in QUAD)


def test_3d_worked_lists():
    assert coords(apply3(Translation((4, 3, -2)), p) for p in TET) == [
        (5, 8, -2), (10, 5, -2), (7, 5, 2), (4, 3, -2)]
    assert coords(apply3(Rotation.quarter(1, 3), p) for p in TET) == [
        (-5, 1, 0), (-2, 6, 0), (-2, 3, 4), (0, 0, 0)]
    assert coords(apply3(ReflectionXY(), p) for p in TET) == [
        (1, 5, 0), (6, 2, 0), (3, 2, -4), (0, 0, 0)]


def test_exact_results_stay_rational():
    (x, y) = apply2(Rotation.quarter(1), ("1/3", "2/5")).coords
    assert isinstance(x, Fraction) and (x, y) == (Fraction(-2, 5), Fraction(1, 3))


def test_float_rotation():
    r = parse_angle("pi/4")
    assert not r.exact
    x, y = apply2(r, (1, 0)).coords
    assert math.isclose(x, math.sqrt(0.5)) and math.isclose(y, math.sqrt(0.5))
    (a, b), (c, d) = linear_part(r)
    assert abs(a * a + c * c - 1) <= 1e-12 and abs(a * b + c * d) <= 1e-12


@pytest.mark.parametrize(
    "text, quarters",
    [("0", 0), ("pi/2", 1), ("pi", 2), ("3pi/2", 3), ("-pi/2", 3), ("2pi", 0), ("4pi/2", 0), ("5pi/2", 1), ("3*pi/2", 3)],
)
def test_parse_angle_quarter_turns(text, quarters):
    assert parse_angle(text).quarter_turns == quarters


def test_parse_angle_float_and_errors():
    assert parse_angle("0.5").radians == 0.5
    assert format_angle(parse_angle("0.5")) == "0.5"
    assert format_angle(parse_angle("3pi/2")) == "3pi/2"
    with pytest.raises(ParseError):
        parse_angle("half")
    with pytest.raises(ParseError):
        parse_angle("pi/0")


def test_dimension_checks():
    with pytest.raises(ShapeError):
        apply2(ReflectionXY(), (1, 2, 3))
    with pytest.raises(ShapeError):
        apply(Translation((1, 2)), (1, 2, 3))
    with pytest.raises(ShapeError):
        compose(Translation((1, 2)), ReflectionXY())
    with pytest.raises(ShapeError):
        apply_polytope(ReflectionXY(), Polytope.polygon(QUAD))


def test_apply_polytope_keeps_labels_and_edges():
    quad = Polytope.polygon([Point(p, label) for p, label in zip(QUAD, "ABCD")])
    moved = apply_polytope(Translation((3, 2)), quad)
    assert moved.edges == quad.edges == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert [v.label for v in moved.vertices] == list("ABCD")
    assert coords(moved.vertices) == [(4, 3), (5, 5), (7, 5), (8, 3)]
    assert apply_polytope(Rotation.quarter(0), quad) == quad
    r = Rotation.quarter(1)
    shape = quad
    for _ in range(4):
        shape = apply_polytope(r, shape)
    assert shape == quad


def test_polytope_validation():
    with pytest.raises(ShapeError):
        Polytope(3, TET, ((0, 0),))
    with pytest.raises(ShapeError):
        Polytope(3, TET, ((0, 4),))


def test_compose_rules():
    q = Rotation.quarter(1)
    assert compose(q, q) == Rotation.quarter(2)
    assert compose(Translation((3, 2)), Translation((-3, -2))) == Translation((0, 0))
    mixed = compose(Translation((1, 0)), q)
    assert isinstance(mixed, Composite)
    assert apply(mixed, (1, 1)).coords == (0, 1)
    assert not compose(parse_angle("0.25"), q).exact


def test_reflection_twice_is_identity():
    rng = random.Random(11)
    twice = compose(ReflectionXY(), ReflectionXY())
    for _ in range(1000):
        p = tuple(Fraction(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(3))
        assert apply(twice, p).coords == p


@given(transforms2(), transforms2(), p2)
def test_compose_matches_sequential_2d(a, b, p):
    assert apply(compose(a, b), p) == apply(a, apply(b, p))


@given(transforms3(), transforms3(), p3)
def test_compose_matches_sequential_3d(a, b, p):
    assert apply(compose(a, b), p) == apply(a, apply(b, p))


@given(transforms2(), p2, p2)
def test_isometry_2d(t, a, b):
    assert sqdist(apply(t, a), apply(t, b)) == sqdist(a, b)


@given(transforms3(), p3, p3)
def test_isometry_3d(t, a, b):
    assert sqdist(apply(t, a), apply(t, b)) == sqdist(a, b)


@given(transforms2(), p2, p2, p2)
def test_triangle_area_preserved(t, a, b, c):
    assert triangle_area(*(apply(t, p) for p in (a, b, c))).value == triangle_area(a, b, c).value


@given(transforms3(), p3, p3, p3, p3)
def test_tetrahedron_volume_preserved(t, a, b, c, d):
    image = [apply(t, p) for p in (a, b, c, d)]
    assert tetrahedron_volume(*image).value == tetrahedron_volume(a, b, c, d).value


@given(st.integers(0, 3))
def test_orientation(k):
    assert det(linear_part(Rotation.quarter(k))) == 1
    assert det(linear_part(Rotation.quarter(k, 3))) == 1
    assert det(linear_part(ReflectionXY())) == -1
    m = linear_part(Rotation.quarter(k, 3))
    assert m @ m.__class__([list(r) for r in zip(*m.rows())]) == m.identity(3)
