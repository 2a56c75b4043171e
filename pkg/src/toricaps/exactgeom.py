"""Exact rational geometry of moment polytopes.

Everything here works over :class:`fractions.Fraction`; no floating point is
ever introduced.  Planar polytopes are stored as their extreme points in
counterclockwise order.  Polytopes in dimension 3 or 4 are only supported as
plain vertex sets (enough for support functions and the brute-force lattice
oracle), without a hull computation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateDomainError, InvalidArgumentError, InvalidDomainError

Rational = Fraction
Point = tuple  # tuple of Fraction
LatticeVector = tuple  # tuple of int

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value) -> Fraction:
    """Parse an exact rational from an int, a Fraction or a ``"p/q"`` string.

    Decimal strings such as ``"0.5"`` are rejected on purpose: every value in
    this package is meant to round-trip exactly.
    """
    if isinstance(value, bool):
        raise InvalidArgumentError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise InvalidArgumentError(f"malformed rational literal {value!r}")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise InvalidArgumentError(f"zero denominator in {value!r}")
        return Fraction(int(m.group(1)), den)
    raise InvalidArgumentError(f"not a rational: {value!r}")


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _convex_hull(points):
    # Andrew's monotone chain; collinear points are dropped.
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class RationalPolytope:
    """A convex rational polytope given by its vertices.

    Use :meth:`from_points` to build one; it canonicalizes the input.  In the
    plane the vertices are the extreme points in strict counterclockwise
    order, starting from the lexicographically smallest one.
    """

    vertices: tuple
    ambient_dim: int = 2

    @classmethod
    def from_points(cls, points: Iterable[Sequence]) -> "RationalPolytope":
        pts = [tuple(parse_rational(c) for c in p) for p in points]
        if not pts:
            raise InvalidDomainError("polytope needs at least one vertex")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise InvalidDomainError("vertices have mixed dimensions")
        n = dims.pop()
        if n < 2 or n > 4:
            raise InvalidDomainError(f"ambient dimension {n} not supported")
        if n > 2:
            return cls(tuple(sorted(set(pts))), n)
        hull = _convex_hull(pts)
        if len(hull) < 3:
            raise DegenerateDomainError("polytope has zero area")
        return cls(tuple(hull), 2)

    def edges(self):
        """Yield the counterclockwise edges ``(start, end)`` of a planar polytope."""
        _require_planar(self)
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]

    def area(self) -> Fraction:
        _require_planar(self)
        return sum((p[0] * q[1] - p[1] * q[0] for p, q in self.edges()), Fraction(0)) / 2

    def to_json(self) -> list:
        return [[format_rational(c) for c in v] for v in self.vertices]

    @classmethod
    def from_json(cls, data) -> "RationalPolytope":
        return cls.from_points(data)

    def __repr__(self):
        body = ", ".join("(" + ", ".join(format_rational(c) for c in v) + ")" for v in self.vertices)
        return f"RationalPolytope([{body}])"


def _require_planar(omega):
    if omega.ambient_dim != 2:
        raise InvalidDomainError("operation only defined for planar polytopes")


@dataclass(frozen=True)
class Widths:
    a: Fraction
    b: Fraction


def support_value(omega: RationalPolytope, v: Sequence[int]) -> Fraction:
    """Return ``max <u, v>`` over the vertices ``u`` of ``omega``."""
    if not omega.vertices:
        raise InvalidDomainError("empty vertex list")
    if len(v) != omega.ambient_dim:
        raise InvalidArgumentError(f"vector {tuple(v)} has wrong length for dimension {omega.ambient_dim}")
    return max(sum((ui * vi for ui, vi in zip(u, v)), Fraction(0)) for u in omega.vertices)


def in_orthant(omega: RationalPolytope) -> bool:
    return all(c >= 0 for u in omega.vertices for c in u)


def contains_origin(omega: RationalPolytope) -> bool:
    zero = (Fraction(0),) * omega.ambient_dim
    if in_orthant(omega):
        # the origin is extreme in the orthant, so it is in omega iff it is a vertex
        return zero in omega.vertices
    return contains_point(omega, zero)


def axis_widths(omega: RationalPolytope) -> tuple:
    """Largest ``t`` with ``t * e_i`` in ``omega``, for each axis ``i``.

    Requires ``omega`` to lie in the nonnegative orthant and contain the
    origin; then each axis section is a face, spanned by the vertices on it.
    """
    if not in_orthant(omega):
        raise InvalidDomainError("moment domain must lie in the nonnegative orthant")
    if not contains_origin(omega):
        raise InvalidDomainError("moment domain must contain the origin")
    n = omega.ambient_dim
    out = []
    for i in range(n):
        on_axis = [u[i] for u in omega.vertices if all(u[j] == 0 for j in range(n) if j != i)]
        out.append(max(on_axis))
    return tuple(out)


def widths(omega: RationalPolytope) -> Widths:
    _require_planar(omega)
    a, b = axis_widths(omega)
    return Widths(a, b)


def contains_point(omega: RationalPolytope, p: Sequence) -> bool:
    _require_planar(omega)
    p = tuple(Fraction(c) for c in p)
    return all(_cross(s, e, p) >= 0 for s, e in omega.edges())


def contains(outer: RationalPolytope, inner: RationalPolytope) -> bool:
    """True iff every vertex of ``inner`` lies in ``outer``."""
    return all(contains_point(outer, u) for u in inner.vertices)


def edge_normals(omega: RationalPolytope) -> list:
    """Primitive integer outward normals of the edges, in edge order."""
    normals = []
    for s, e in omega.edges():
        dx, dy = e[0] - s[0], e[1] - s[1]
        # rotate the CCW edge by -90 degrees
        nx, ny = dy, -dx
        den = math.lcm(nx.denominator, ny.denominator)
        ix, iy = int(nx * den), int(ny * den)
        g = math.gcd(ix, iy)
        normals.append((ix // g, iy // g))
    return normals


def is_strongly_convex(omega: RationalPolytope) -> bool:
    """Check that ``omega`` is a moment domain supported by a strongly convex fan.

    Every outward edge normal must be ``-e1``, ``-e2`` or lie in the closed
    positive quadrant; the domain must also sit in the orthant and contain 0.
    """
    if omega.ambient_dim != 2 or not in_orthant(omega) or not contains_origin(omega):
        return False
    for n in edge_normals(omega):
        if n in ((-1, 0), (0, -1)):
            continue
        if n[0] < 0 or n[1] < 0:
            return False
    return True


def scale(omega: RationalPolytope, c) -> RationalPolytope:
    c = parse_rational(c)
    if c <= 0:
        raise InvalidArgumentError(f"scale factor must be positive, got {c}")
    return RationalPolytope(tuple(tuple(c * x for x in u) for u in omega.vertices), omega.ambient_dim)
