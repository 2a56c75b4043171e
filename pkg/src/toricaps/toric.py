"""Curve classes on smooth toric surfaces.

A curve class is a vector of nonnegative ray multiplicities ``a`` with
``sum a_rho * v_rho = 0``.  Its intersection with a torus-invariant divisor is
``sum a_rho * phi_D(v_rho)`` and its anticanonical degree is ``sum a_rho``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidArgumentError, NotMovableError, UnsupportedFanError
from .exactgeom import RationalPolytope, format_rational, support_value
from .fan import DivisorOnFan, Fan2D, divisor_of_polytope, is_smooth, locate_cone, primitive, support_eval


def _ray_key(r) -> str:
    return f"{r[0]},{r[1]}"


def _parse_ray_key(key: str) -> tuple:
    x, y = key.split(",")
    return int(x), int(y)


@dataclass(frozen=True)
class CurveClass:
    """Nonnegative ray multiplicities on ``fan`` lying in the kernel of the ray map."""

    fan: Fan2D
    multiplicities: tuple

    def __post_init__(self):
        mult = tuple(int(a) for a in self.multiplicities)
        object.__setattr__(self, "multiplicities", mult)
        if len(mult) != len(self.fan.rays):
            raise InvalidArgumentError("one multiplicity per ray is required")
        if any(a < 0 for a in mult):
            raise InvalidArgumentError("multiplicities must be nonnegative")
        sx = sum(a * r[0] for a, r in zip(mult, self.fan.rays))
        sy = sum(a * r[1] for a, r in zip(mult, self.fan.rays))
        if sx or sy:
            raise InvalidArgumentError(f"sum of a_rho * v_rho is ({sx}, {sy}), not zero")

    @classmethod
    def from_dict(cls, fan: Fan2D, entries) -> "CurveClass":
        mult = [0] * len(fan.rays)
        for ray, a in dict(entries).items():
            if isinstance(ray, str):
                ray = _parse_ray_key(ray)
            if tuple(ray) not in fan:
                raise InvalidArgumentError(f"{ray} is not a ray of the fan")
            mult[fan.index(ray)] += int(a)
        return cls(fan, tuple(mult))

    @classmethod
    def zero(cls, fan: Fan2D) -> "CurveClass":
        return cls(fan, (0,) * len(fan.rays))

    def as_dict(self) -> dict:
        return {r: a for r, a in zip(self.fan.rays, self.multiplicities) if a}

    def support(self) -> set:
        return set(self.as_dict())

    def is_zero(self) -> bool:
        return not any(self.multiplicities)

    def _check_fan(self, other):
        if self.fan != other.fan:
            raise InvalidArgumentError("curve classes live on different fans")

    def __add__(self, other: "CurveClass") -> "CurveClass":
        self._check_fan(other)
        return CurveClass(self.fan, tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities)))

    def __rmul__(self, m: int) -> "CurveClass":
        return CurveClass(self.fan, tuple(m * a for a in self.multiplicities))

    def to_json(self) -> dict:
        return {_ray_key(r): a for r, a in self.as_dict().items()}

    @classmethod
    def from_json(cls, fan: Fan2D, data) -> "CurveClass":
        return cls.from_dict(fan, data)


@dataclass(frozen=True)
class CocharacterRelation:
    """The class of the closure of the one-parameter subgroup ``u``."""

    u: tuple
    curve: CurveClass

    @property
    def fan(self) -> Fan2D:
        return self.curve.fan

    @property
    def relation(self) -> tuple:
        return self.curve.multiplicities


def _cone_coordinates(fan: Fan2D, v) -> dict:
    i, alpha, beta = locate_cone(fan, v)
    n = len(fan.rays)
    out = {}
    for idx, coef in ((i, alpha), ((i + 1) % n, beta)):
        if coef:
            if coef.denominator != 1:
                raise UnsupportedFanError("non-integral cone coordinates; the fan is not smooth")
            out[fan.rays[idx]] = out.get(fan.rays[idx], 0) + int(coef)
    return out


def cocharacter_relation(fan: Fan2D, u) -> CocharacterRelation:
    """Write ``u`` and ``-u`` in the cones containing them and add the coordinates."""
    if not is_smooth(fan):
        raise UnsupportedFanError("cocharacter relations need a smooth fan")
    u = tuple(int(c) for c in u)
    if u == (0, 0):
        raise InvalidArgumentError("cocharacter must be nonzero")
    if primitive(u) != u:
        raise InvalidArgumentError(f"cocharacter {u} is not primitive")
    entries = _cone_coordinates(fan, u)
    for r, a in _cone_coordinates(fan, (-u[0], -u[1])).items():
        entries[r] = entries.get(r, 0) + a
    return CocharacterRelation(u, CurveClass.from_dict(fan, entries))


def intersect_divisor(c: Union[CurveClass, CocharacterRelation], d: DivisorOnFan) -> Fraction:
    if isinstance(c, CocharacterRelation):
        if c.fan != d.fan:
            raise InvalidArgumentError("class and divisor live on different fans")
        u = c.u
        return support_eval(d, u) + support_eval(d, (-u[0], -u[1]))
    if c.fan != d.fan:
        raise InvalidArgumentError("class and divisor live on different fans")
    return sum((a * phi for a, phi in zip(c.multiplicities, d.coefficients)), Fraction(0))


def anticanonical_degree(c: Union[CurveClass, CocharacterRelation]) -> int:
    if isinstance(c, CocharacterRelation):
        c = c.curve
    return sum(c.multiplicities)


def _require_smooth_strongly_convex(fan: Fan2D):
    if not is_smooth(fan):
        raise UnsupportedFanError("fan is not smooth")
    if not fan.is_strongly_convex() or (-1, 0) not in fan or (0, -1) not in fan:
        raise UnsupportedFanError("fan is not strongly convex")


def movable_decompose(c: CurveClass) -> dict:
    """Coefficients ``b`` with ``c = sum b_rho R_rho`` over the positive rays."""
    fan = c.fan
    _require_smooth_strongly_convex(fan)
    a = dict(zip(fan.rays, c.multiplicities))
    b = {r: a[r] for r in fan.positive_rays() if a[r]}
    need_x = sum(m * r[0] for r, m in b.items())
    need_y = sum(m * r[1] for r, m in b.items())
    if a[(-1, 0)] != need_x or a[(0, -1)] != need_y:
        raise NotMovableError(
            f"residual multiplicities ({a[(-1, 0)]}, {a[(0, -1)]}) on -e1, -e2 "
            f"do not match ({need_x}, {need_y})"
        )
    return b


def compose_movable(fan: Fan2D, b: dict) -> CurveClass:
    """Inverse of :func:`movable_decompose`: expand ``sum b_rho R_rho``."""
    _require_smooth_strongly_convex(fan)
    entries = {}
    for r, m in b.items():
        if not m:
            continue
        if r not in fan.positive_rays():
            raise InvalidArgumentError(f"{r} is not a positive ray")
        entries[r] = entries.get(r, 0) + m
        entries[(-1, 0)] = entries.get((-1, 0), 0) + m * r[0]
        entries[(0, -1)] = entries.get((0, -1), 0) + m * r[1]
    return CurveClass.from_dict(fan, entries)


def fiber_multiple(c: CurveClass) -> Optional[tuple]:
    """Return ``(j, m)`` if ``c`` is ``m`` times the fiber class along ``e_j``."""
    a = c.as_dict()
    for j, (pos, neg) in enumerate((((1, 0), (-1, 0)), ((0, 1), (0, -1))), start=1):
        if set(a) == {pos, neg} and a[pos] == a[neg]:
            return j, a[pos]
    return None


@dataclass(frozen=True)
class ClassPolygon:
    """Lattice polygon of a curve class, with its affine and Omega perimeters."""

    vertices: tuple
    affine_perimeter: int
    omega_length: Fraction

    @property
    def degenerate(self) -> bool:
        return len(self.vertices) < 3

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "affine_perimeter": self.affine_perimeter,
            "omega_length": format_rational(self.omega_length),
        }


def polygon_of_class(c: CurveClass, omega: RationalPolytope) -> ClassPolygon:
    """Build the (possibly degenerate) lattice polygon with an edge of lattice
    length ``a_rho`` orthogonal to each ray ``v_rho``.

    The perimeters are measured on the polygon itself and checked against the
    anticanonical degree and the intersection with the divisor of ``omega``.
    """
    if c.is_zero():
        raise InvalidArgumentError("the zero class has no polygon")
    point = (0, 0)
    vertices = [point]
    for r, a in zip(c.fan.rays, c.multiplicities):
        if a:
            point = (point[0] - a * r[1], point[1] + a * r[0])
            vertices.append(point)
    assert vertices[-1] == (0, 0)
    vertices.pop()

    affine = 0
    length = Fraction(0)
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        dx, dy = q[0] - p[0], q[1] - p[1]
        g = math.gcd(dx, dy)
        affine += g
        length += g * support_value(omega, (dy // g, -dx // g))

    if affine != anticanonical_degree(c):
        raise AssertionError(f"affine perimeter {affine} != -K.C = {anticanonical_degree(c)}")
    area = intersect_divisor(c, divisor_of_polytope(omega, c.fan))
    if length != area:
        raise AssertionError(f"Omega-perimeter {length} != A.C = {area}")
    return ClassPolygon(tuple(vertices), affine, length)
