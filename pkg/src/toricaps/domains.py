"""Named moment domains and random generators of strongly convex polytopes."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import InvalidArgumentError
from .exactgeom import RationalPolytope, parse_rational


def _positive(name, x):
    x = parse_rational(x)
    if x <= 0:
        raise InvalidArgumentError(f"{name} must be positive, got {x}")
    return x


def ball(c=1) -> RationalPolytope:
    c = _positive("capacity", c)
    return RationalPolytope.from_points([(0, 0), (c, 0), (0, c)])


def ellipsoid(a, b) -> RationalPolytope:
    a, b = _positive("a", a), _positive("b", b)
    return RationalPolytope.from_points([(0, 0), (a, 0), (0, b)])


def polydisk(a, b) -> RationalPolytope:
    a, b = _positive("a", a), _positive("b", b)
    return RationalPolytope.from_points([(0, 0), (a, 0), (a, b), (0, b)])


def example_region(r) -> RationalPolytope:
    """The quadrilateral ``conv{0, (1,0), ((r-1)/r, 1), (0,1)}``.

    At ``r = 1`` it degenerates to the unit triangle.
    """
    r = parse_rational(r)
    if r < 1:
        raise InvalidArgumentError(f"r must be at least 1, got {r}")
    return RationalPolytope.from_points([(0, 0), (1, 0), ((r - 1) / r, 1), (0, 1)])


def _random_rational(rng, max_den, hi):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(1, hi * den), den)


def random_strongly_convex(rng: random.Random, n_points=3, max_den=6, hi=3, square=False) -> RationalPolytope:
    """Down-closure of a few random points with coordinates in ``(0, hi]``.

    The hull of the rectangles ``[0, x] x [0, y]`` is strongly convex.  With
    ``square=True`` the two axis widths are forced to be equal.
    """
    pts = [(_random_rational(rng, max_den, hi), _random_rational(rng, max_den, hi)) for _ in range(n_points)]
    if square:
        t = max(max(x for x, _ in pts), max(y for _, y in pts))
        pts += [(t, 0), (0, t)]
    closure = [(0, 0)]
    for x, y in pts:
        closure += [(x, 0), (0, y), (x, y)]
    return RationalPolytope.from_points(closure)


def random_superset(rng: random.Random, omega: RationalPolytope, n_points=2, max_den=6, hi=3) -> RationalPolytope:
    """A strongly convex polytope containing ``omega``."""
    extra = random_strongly_convex(rng, n_points, max_den, hi)
    return RationalPolytope.from_points(omega.vertices + extra.vertices)
