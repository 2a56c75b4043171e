from fractions import Fraction as F

import pytest

from toricaps.errors import DegenerateDomainError, InvalidArgumentError, InvalidDomainError
from toricaps.exactgeom import (
    RationalPolytope,
    contains,
    edge_normals,
    format_rational,
    is_strongly_convex,
    parse_rational,
    scale,
    support_value,
    widths,
)


def test_parse_and_format():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("6/8") == F(3, 4)
    assert parse_rational(" -2 ") == -2
    assert parse_rational(F(1, 3)) == F(1, 3)
    assert format_rational(F(7, 4)) == "7/4"
    assert format_rational(F(4, 2)) == "2"
    for bad in ("0.5", "1/0", "abc", "", True, 1.5):
        with pytest.raises(InvalidArgumentError):
            parse_rational(bad)


def test_canonical_vertices():
    p = RationalPolytope.from_points([(1, 1), (0, 0), (1, 0), (0, 1), ("1/2", "1/2"), (1, "1/2")])
    assert p.vertices == ((0, 0), (1, 0), (1, 1), (0, 1))
    assert p.area() == 1
    with pytest.raises(DegenerateDomainError):
        RationalPolytope.from_points([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(InvalidDomainError):
        RationalPolytope.from_points([])


def test_json_round_trip(omega4):
    assert RationalPolytope.from_json(omega4.to_json()) == omega4
    assert omega4.to_json()[2] == ["3/4", "1"]


def test_support_value(square, triangle, omega4):
    assert support_value(square, (1, 1)) == 2
    assert support_value(triangle, (-1, -1)) == 0
    assert support_value(omega4, (1, 1)) == F(7, 4)
    with pytest.raises(InvalidArgumentError):
        support_value(square, (1, 1, 1))


def test_widths(square, rect, omega4):
    assert (widths(square).a, widths(square).b) == (1, 1)
    assert (widths(rect).a, widths(rect).b) == (1, 2)
    assert (widths(omega4).a, widths(omega4).b) == (1, 1)
    off = RationalPolytope.from_points([(1, 1), (2, 1), (1, 2)])
    with pytest.raises(InvalidDomainError):
        widths(off)


def test_strong_convexity(square, omega4):
    assert is_strongly_convex(square)
    assert is_strongly_convex(omega4)
    bad = RationalPolytope.from_points([(0, 0), (1, 0), (2, 1), (0, 1)])
    assert (1, -1) in edge_normals(bad)
    assert not is_strongly_convex(bad)
    # strongly convex shape that misses the origin
    assert not is_strongly_convex(RationalPolytope.from_points([(1, 1), (2, 1), (1, 2)]))


def test_scale(square, triangle, omega4):
    assert scale(square, 2) == RationalPolytope.from_points([(0, 0), (2, 0), (2, 2), (0, 2)])
    assert scale(triangle, 3) == RationalPolytope.from_points([(0, 0), (3, 0), (0, 3)])
    assert scale(omega4, 1) == omega4
    for c in (0, -1):
        with pytest.raises(InvalidArgumentError):
            scale(square, c)


def test_contains(square, triangle):
    assert contains(square, triangle)
    assert not contains(triangle, square)


def test_higher_dim_vertices():
    cube = RationalPolytope.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert cube.ambient_dim == 3
    assert support_value(cube, (1, 1, 1)) == 1
