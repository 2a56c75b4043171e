"""Complete fans in the plane: normal fans, smoothness and resolution.

Rays are primitive integer pairs kept in counterclockwise order.  The cyclic
order is made canonical by starting at the direction ``(0, -1)``, so that a
strongly convex fan reads ``-e2``, then its positive rays, then ``-e1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Optional, Sequence

from .errors import InvalidArgumentError, InvalidDomainError
from .exactgeom import RationalPolytope, edge_normals, format_rational, parse_rational, support_value


def primitive(v: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries."""
    v = tuple(int(c) for c in v)
    g = math.gcd(*v)
    if g == 0:
        raise InvalidArgumentError("the zero vector has no primitive generator")
    return tuple(c // g for c in v)


def det(u, w) -> int:
    return u[0] * w[1] - u[1] * w[0]


def _half(v):
    # rotate by +90 degrees so that (0, -1) lands on the positive x-axis
    x, y = -v[1], v[0]
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_cmp(a, b):
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = det(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def ccw_sorted(vectors) -> list:
    return sorted(vectors, key=cmp_to_key(_ccw_cmp))


@dataclass(frozen=True)
class Fan2D:
    """A complete fan given by its rays in canonical counterclockwise order."""

    rays: tuple

    def __post_init__(self):
        rays = self.rays
        if len(rays) < 3:
            raise InvalidArgumentError("a complete planar fan needs at least three rays")
        if len(set(rays)) != len(rays):
            raise InvalidArgumentError("fan rays must be distinct")
        for r in rays:
            if len(r) != 2 or primitive(r) != tuple(r):
                raise InvalidArgumentError(f"ray {r} is not a primitive integer pair")
        if list(rays) != ccw_sorted(rays):
            raise InvalidArgumentError("fan rays must be in canonical counterclockwise order")
        for u, w in self.cones():
            if det(u, w) <= 0:
                raise InvalidArgumentError(f"adjacent rays {u}, {w} do not span a strictly convex cone")

    @classmethod
    def from_rays(cls, rays) -> "Fan2D":
        return cls(tuple(ccw_sorted({primitive(r) for r in rays})))

    def cones(self):
        """Adjacent ray pairs ``(u, w)`` in counterclockwise order."""
        n = len(self.rays)
        return [(self.rays[i], self.rays[(i + 1) % n]) for i in range(n)]

    def index(self, ray) -> int:
        return self.rays.index(tuple(ray))

    def __contains__(self, ray):
        return tuple(ray) in self.rays

    def __len__(self):
        return len(self.rays)

    def positive_rays(self) -> list:
        """Rays in the closed positive quadrant (the set written Sigma^+ for strongly convex fans)."""
        return [r for r in self.rays if r[0] >= 0 and r[1] >= 0]

    def is_strongly_convex(self) -> bool:
        return all(r in ((-1, 0), (0, -1)) or (r[0] >= 0 and r[1] >= 0) for r in self.rays)

    def to_json(self) -> list:
        return [list(r) for r in self.rays]

    @classmethod
    def from_json(cls, data) -> "Fan2D":
        return cls(tuple(tuple(int(c) for c in r) for r in data))


def normal_fan(omega: RationalPolytope) -> Fan2D:
    """The fan spanned by the outward edge normals of a planar polytope."""
    if omega.ambient_dim != 2 or len(omega.vertices) < 3:
        raise InvalidDomainError("normal fan needs a full-dimensional planar polytope")
    return Fan2D.from_rays(edge_normals(omega))


def is_smooth(fan: Fan2D) -> bool:
    return all(det(u, w) == 1 for u, w in fan.cones())


def _basis_complement(u):
    # integer u' with det(u, u') = 1, from the extended gcd of u's entries
    p, q = u
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    # p*old_s + q*old_t == 1
    return (-old_t, old_s)


def resolution_ray(u, w) -> tuple:
    """First ray of the minimal resolution of the cone ``(u, w)`` next to ``u``.

    For ``d = det(u, w) > 1`` this is the unique lattice point ``(k u + w) / d``
    with ``0 < k < d``; it satisfies ``det(u, v) = 1`` and ``det(v, w) = k``.
    """
    d = det(u, w)
    if d <= 1:
        raise InvalidArgumentError(f"cone {u}, {w} is already smooth")
    up = _basis_complement(u)
    k = (-det(w, up)) % d
    v = ((k * u[0] + w[0]) // d, (k * u[1] + w[1]) // d)
    assert det(u, v) == 1 and det(v, w) == k
    return v


def _first_singular(cones):
    return cones[0]


def refine_smooth(fan: Fan2D, pick: Optional[Callable] = None) -> Fan2D:
    """Minimal smooth refinement (toric resolution) of a planar fan.

    Repeatedly chooses a singular cone with ``pick`` (first one by default)
    and inserts the Hirzebruch-Jung ray adjacent to its first generator.  The
    result does not depend on the choice; tests exercise other strategies.
    """
    pick = pick or _first_singular
    current = fan
    while True:
        singular = [(u, w) for u, w in current.cones() if det(u, w) > 1]
        if not singular:
            return current
        u, w = pick(singular)
        current = Fan2D.from_rays(current.rays + (resolution_ray(u, w),))


def inserted_rays(coarse: Fan2D, fine: Fan2D) -> list:
    return [r for r in fine.rays if r not in coarse]


def star_subdivide(fan: Fan2D, u, w) -> Fan2D:
    """Insert ``primitive(u + w)`` into the cone between adjacent rays ``u`` and ``w``.

    On a smooth cone this is the toric blowup of the corresponding fixed point.
    """
    if (tuple(u), tuple(w)) not in fan.cones():
        raise InvalidArgumentError(f"{u}, {w} are not adjacent rays of the fan")
    return Fan2D.from_rays(fan.rays + (primitive((u[0] + w[0], u[1] + w[1])),))


@dataclass(frozen=True)
class DivisorOnFan:
    """A torus-invariant Q-divisor, stored as its support-function values on rays."""

    fan: Fan2D
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != len(self.fan.rays):
            raise InvalidArgumentError("one coefficient per ray is required")
        object.__setattr__(self, "coefficients", tuple(parse_rational(c) for c in self.coefficients))

    def coefficient(self, ray) -> Fraction:
        return self.coefficients[self.fan.index(ray)]

    def to_json(self) -> dict:
        return {"rays": self.fan.to_json(), "coefficients": [format_rational(c) for c in self.coefficients]}


def divisor_of_polytope(omega: RationalPolytope, fan: Optional[Fan2D] = None) -> DivisorOnFan:
    """The divisor whose support function is the Omega-norm, on ``fan`` (default: normal fan)."""
    fan = fan or normal_fan(omega)
    return DivisorOnFan(fan, tuple(support_value(omega, r) for r in fan.rays))


def locate_cone(fan: Fan2D, v) -> tuple:
    """Return ``(i, alpha, beta)`` with ``v = alpha * rays[i] + beta * rays[i+1]``.

    Both coefficients are nonnegative rationals; a vector parallel to a ray is
    assigned to the cone that starts at that ray.
    """
    v = tuple(v)
    if v == (0, 0):
        raise InvalidArgumentError("cannot locate the zero vector")
    for i, (u, w) in enumerate(fan.cones()):
        if det(u, v) >= 0 and det(v, w) > 0:
            d = det(u, w)
            return i, Fraction(det(v, w), d), Fraction(det(u, v), d)
    raise AssertionError("complete fan must contain every vector")


def support_eval(d: DivisorOnFan, v) -> Fraction:
    """Evaluate the piecewise-linear support function of ``d`` at ``v``."""
    i, alpha, beta = locate_cone(d.fan, v)
    n = len(d.coefficients)
    return alpha * d.coefficients[i] + beta * d.coefficients[(i + 1) % n]
