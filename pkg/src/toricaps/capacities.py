"""Lattice bounds l_k and u_k, Gutt-Hutchings capacities and related quantities.

The fast path works on the smooth strongly convex fan of the domain.  Every
movable class there is ``sum b_rho R_rho`` over the positive rays, with area
``sum b_rho ||v_rho||`` and anticanonical degree ``sum b_rho (1 + v_rho1 + v_rho2)``,
so ``l_k`` is an unbounded covering knapsack solved by dynamic programming.

:func:`l_k_bruteforce` solves the original lattice problem (sequences of
nonzero integer vectors summing to zero) by a shortest-path search and is kept
independent of the fan code so it can serve as an oracle.
"""

from __future__ import annotations

import heapq
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import (
    InvalidArgumentError,
    InvalidDomainError,
    SearchBudgetExceeded,
    UnsupportedDomainError,
    UnsupportedFanError,
)
from .exactgeom import (
    RationalPolytope,
    axis_widths,
    format_rational,
    is_strongly_convex,
    parse_rational,
    support_value,
    widths,
)
from .fan import Fan2D, is_smooth, normal_fan, refine_smooth
from .tangency import TangencyConstraint, codim, is_lax
from .toric import CurveClass, compose_movable

log = logging.getLogger(__name__)

E1, E2 = (1, 0), (0, 1)


def _check_k(k):
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"k must be a positive integer, got {k!r}")


def _require_strongly_convex(omega):
    if not is_strongly_convex(omega):
        raise UnsupportedDomainError(
            "domain is not strongly convex; use l_k_bruteforce for the lattice lower bound"
        )


@dataclass
class CoveringTable:
    """Bottom-up table of the covering knapsack over the positive rays.

    ``entries[t]`` is the best ``(cost, weight, multiplicities)`` reaching
    anticanonical degree at least ``t``.  Keys compare lexicographically, so
    ties in cost go to smaller weight, then to the lexicographically smallest
    multiplicity vector in ray order.
    """

    fan: Fan2D
    rays: tuple
    costs: tuple
    weights: tuple
    relations: tuple
    entries: list = field(default_factory=list)

    def __post_init__(self):
        if not self.entries:
            self.entries.append((Fraction(0), 0, (0,) * len(self.fan.rays)))

    def extend(self, target: int):
        for t in range(len(self.entries), target + 1):
            self.entries.append(min(self.add(i, self.at(t - w)) for i, w in enumerate(self.weights)))

    def at(self, t: int):
        t = max(t, 0)
        self.extend(t)
        return self.entries[t]

    def add(self, i: int, key):
        cost, weight, mult = key
        rel = self.relations[i]
        return (cost + self.costs[i], weight + self.weights[i], tuple(a + b for a, b in zip(mult, rel)))


class FanSolver:
    """Exact ``l_k``/``u_k`` on a smooth strongly convex fan supporting ``omega``.

    ``fan`` defaults to the minimal resolution of the normal fan; any further
    smooth strongly convex refinement gives the same values.
    """

    def __init__(self, omega: RationalPolytope, fan: Optional[Fan2D] = None):
        _require_strongly_convex(omega)
        base = normal_fan(omega)
        fan = fan or refine_smooth(base)
        if not is_smooth(fan) or not fan.is_strongly_convex():
            raise UnsupportedFanError("solver fan must be smooth and strongly convex")
        missing = [r for r in base.rays if r not in fan]
        if missing or (-1, 0) not in fan or (0, -1) not in fan:
            raise UnsupportedFanError(f"fan does not refine the normal fan of omega (missing {missing})")
        self.omega = omega
        self.fan = fan
        rays = tuple(fan.positive_rays())
        relations = tuple(compose_movable(fan, {r: 1}).multiplicities for r in rays)
        self.table = CoveringTable(
            fan,
            rays,
            tuple(support_value(omega, r) for r in rays),
            tuple(1 + r[0] + r[1] for r in rays),
            relations,
        )

    def _witness(self, key):
        return key[0], CurveClass(self.fan, key[2])

    def l_k(self, k: int):
        _check_k(k)
        return self._witness(self.table.at(k + 1))

    def u_k(self, k: int):
        """Minimum over movable classes that are not multiples of a single fiber.

        A class is excluded iff its positive part is supported on ``{e1}``
        alone or ``{e2}`` alone; the single fiber itself is allowed when its
        degree 2 already reaches ``k + 1``.  Every admissible class either uses
        a positive ray other than ``e1, e2`` or uses both of them, and each
        branch is a translate of the unrestricted table.
        """
        _check_k(k)
        tab = self.table
        t = k + 1
        candidates = []
        for i, r in enumerate(tab.rays):
            if r not in (E1, E2):
                candidates.append(tab.add(i, tab.at(t - tab.weights[i])))
        if E1 in tab.rays and E2 in tab.rays:
            i1, i2 = tab.rays.index(E1), tab.rays.index(E2)
            candidates.append(tab.add(i1, tab.add(i2, tab.at(t - 4))))
        if t <= 2:
            zero = (Fraction(0), 0, (0,) * len(self.fan.rays))
            for e in (E1, E2):
                if e in tab.rays:
                    candidates.append(tab.add(tab.rays.index(e), zero))
        return self._witness(min(candidates))

    def table_upto(self, k_max: int) -> CoveringTable:
        self.table.extend(k_max + 1)
        return self.table


@lru_cache(maxsize=256)
def solver(omega: RationalPolytope, fan: Optional[Fan2D] = None) -> FanSolver:
    return FanSolver(omega, fan)


def l_k(omega: RationalPolytope, k: int, fan: Optional[Fan2D] = None):
    """Return ``(l_k(omega), witness class)`` for a strongly convex polytope."""
    return solver(omega, fan).l_k(k)


def u_k(omega: RationalPolytope, k: int, fan: Optional[Fan2D] = None):
    """Return ``(u_k(omega), witness class)`` for a strongly convex polytope."""
    return solver(omega, fan).u_k(k)


# --- brute-force lattice oracle -------------------------------------------------

DEFAULT_BUDGET = 3_000_000


def _seed_bound(norm, n, k, restrict_to_u):
    axis = [norm(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    pairs = -(-(k + 1) // 2)
    if not restrict_to_u:
        # pairs (e_i, -e_i)
        return pairs * min(axis)
    lo, hi = sorted(axis)
    best = (max(pairs, 2) - 1) * lo + hi
    # copies of ((1,1), -e1, -e2)
    best = min(best, -(-(k + 1) // 3) * norm((1, 1)))
    if k <= 1:
        best = min(best, lo)
    return best


def l_k_bruteforce(
    omega: RationalPolytope,
    k: int,
    restrict_to_U: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Fraction:
    """Solve the lattice formulation directly.

    Minimizes ``sum ||v_i||`` over sequences of nonzero integer vectors with
    ``sum v_i = 0`` and at least ``k + 1`` terms (and, with ``restrict_to_U``,
    not lying entirely on one coordinate axis unless it is the pair
    ``(e_j, -e_j)``).

    Vectors with no positive coordinate cost nothing, so a sequence is a
    multiset ``Q`` of vectors with a positive coordinate whose sum ``s`` is
    nonnegative, padded by ``sum s_i`` unit vectors ``-e_i``.  The search is a
    Dijkstra over partial sums of ``Q``.  Any ``Q`` of cost at most ``B`` has
    positive (hence also negative) coordinate mass at most ``B / w_i`` in
    axis ``i``, where ``w_i`` is the axis width, which bounds the state box.
    """
    _check_k(k)
    n = omega.ambient_dim
    if n not in (2, 3):
        raise InvalidDomainError(f"brute force supports dimension 2 or 3, not {n}")
    if restrict_to_U and n != 2:
        raise InvalidDomainError("the restricted set U(k) is only defined in dimension 2")
    w = axis_widths(omega)
    if min(w) <= 0:
        raise InvalidDomainError("domain must contain a segment of every coordinate axis")

    scale_ = math.lcm(*(c.denominator for u in omega.vertices for c in u))

    @lru_cache(maxsize=None)
    def norm(v):
        return support_value(omega, v)

    bound = _seed_bound(norm, n, k, restrict_to_U)
    box = [int(bound // wi) for wi in w]
    n_states = math.prod(2 * b + 1 for b in box) * (k + 2) * (4 if restrict_to_U else 1)
    if n_states > budget:
        raise SearchBudgetExceeded(
            f"search box {box} ({n_states} states) exceeds budget {budget}", bound=bound
        )

    int_bound = int(bound * scale_)
    moves = []
    for v in itertools.product(*(range(-b, b + 1) for b in box)):
        if max(v) <= 0:
            continue
        c = int(norm(v) * scale_)
        if c <= int_bound:
            # flags: v leaves span(e1), v leaves span(e2)
            moves.append((c, v, any(v[1:]), v[0] != 0 or any(v[2:])))
    moves.sort()

    found = _shortest_cover(moves, n, box, k + 1, int_bound, restrict_to_U)
    values = [] if found is None else [Fraction(found, scale_)]
    if restrict_to_U and k <= 1:
        # the bare pair (e_j, -e_j) is admissible on its own
        values.append(min(norm((1, 0)), norm((0, 1))))
    if not values:
        raise AssertionError("seed sequence lies inside the search box; search cannot be empty")
    return min(values)


def _shortest_cover(moves, n, box, target, int_bound, restrict_to_u):
    start = ((0,) * n, 0, False, False)
    dist = {start: 0}
    heap = [(0, start)]
    while heap:
        d, state = heapq.heappop(heap)
        if d > dist[state]:
            continue
        s, count, off1, off2 = state
        if count and min(s) >= 0 and count + sum(s) >= target:
            if not restrict_to_u or (off1 and off2):
                return d
        for c, v, o1, o2 in moves:
            nd = d + c
            if nd > int_bound:
                break
            ns = tuple(a + b for a, b in zip(s, v))
            if any(abs(x) > b for x, b in zip(ns, box)):
                continue
            if restrict_to_u:
                nxt = (ns, min(count + 1, target), off1 or o1, off2 or o2)
            else:
                nxt = (ns, min(count + 1, target), False, False)
            if nd < dist.get(nxt, int_bound + 1):
                dist[nxt] = nd
                heapq.heappush(heap, (nd, nxt))
    return None


# --- other capacities --------------------------------------------------------------

def _compositions(k, n):
    for cuts in itertools.combinations(range(k + n - 1), n - 1):
        prev = -1
        parts = []
        for c in cuts + (k + n - 1,):
            parts.append(c - prev - 1)
            prev = c
        yield tuple(parts)


def gh_capacity(omega: RationalPolytope, k: int) -> Fraction:
    """Gutt-Hutchings capacity: min of ``||v||`` over ``v >= 0`` with entries summing to ``k``."""
    _check_k(k)
    if omega.ambient_dim == 2:
        _require_strongly_convex(omega)
    return min(support_value(omega, v) for v in _compositions(k, omega.ambient_dim))


def asymptotic_slope(omega: RationalPolytope):
    """Return ``(lim l_k / k, witness ray)``.

    The limit is the minimum of ``||v|| / (1 + v1 + v2)`` over the positive
    rays of the (unresolved) normal fan; ties go to the first ray
    counterclockwise from ``-e2``.
    """
    _require_strongly_convex(omega)
    best = None
    for r in normal_fan(omega).positive_rays():
        ratio = support_value(omega, r) / (1 + r[0] + r[1])
        if best is None or ratio < best[0]:
            best = (ratio, r)
    return best


def asymptotic_slope_lattice(omega: RationalPolytope, box: int = 20):
    """Infimum of ``||w|| / (1 + w1 + w2)`` over nonzero ``w`` in ``[0, box]^2``."""
    best = None
    for w in itertools.product(range(box + 1), repeat=2):
        if w == (0, 0):
            continue
        ratio = support_value(omega, w) / (1 + w[0] + w[1])
        if best is None or ratio < best[0]:
            best = (ratio, w)
    return best


def gromov_width(omega: RationalPolytope) -> Fraction:
    _require_strongly_convex(omega)
    ws = widths(omega)
    return min(ws.a, ws.b)


# --- reports --------------------------------------------------------------------------

@dataclass(frozen=True)
class CapacityReport:
    k: int
    lk: Fraction
    uk: Fraction
    gh: Fraction
    lk_witness: CurveClass
    uk_witness: CurveClass
    exact: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "lk": format_rational(self.lk),
            "uk": format_rational(self.uk),
            "gh": format_rational(self.gh),
            "lk_witness": self.lk_witness.to_json(),
            "uk_witness": self.uk_witness.to_json(),
            "exact": self.exact,
            "rays": self.lk_witness.fan.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "CapacityReport":
        fan = Fan2D.from_json(data["rays"])
        return cls(
            int(data["k"]),
            parse_rational(data["lk"]),
            parse_rational(data["uk"]),
            parse_rational(data["gh"]),
            CurveClass.from_json(fan, data["lk_witness"]),
            CurveClass.from_json(fan, data["uk_witness"]),
            bool(data["exact"]),
        )


def capacity_report(omega: RationalPolytope, k_max: int) -> list:
    """One :class:`CapacityReport` per ``k = 1..k_max``."""
    _check_k(k_max)
    s = solver(omega)
    ws = widths(omega)
    exact = ws.a == ws.b
    out = []
    for k in range(1, k_max + 1):
        lv, lw = s.l_k(k)
        uv, uw = s.u_k(k)
        out.append(CapacityReport(k, lv, uv, gh_capacity(omega, k), lw, uw, exact))
    return out


@dataclass(frozen=True)
class RSFTInterval:
    """Bounds ``lower <= r_P <= upper`` for a tangency constraint ``P``."""

    k: int
    lower: Fraction
    upper: Optional[Fraction]
    exact: bool
    stable_upper: Optional[Fraction] = None
    warning: Optional[str] = None

    def to_json(self) -> dict:
        fmt = lambda x: None if x is None else format_rational(x)  # noqa: E731
        return {
            "k": self.k,
            "lower": fmt(self.lower),
            "upper": fmt(self.upper),
            "exact": self.exact,
            "stable_upper": fmt(self.stable_upper),
            "warning": self.warning,
        }


def rsft_interval(omega: RationalPolytope, p: TangencyConstraint) -> RSFTInterval:
    """Sandwich the RSFT capacity of ``X_omega`` for constraint ``p`` in dimension 4.

    The upper bound needs a lax constraint; for a one-point constraint
    ``((j))`` the bound ``u_{j+1}`` for embeddings into products is also
    reported.
    """
    if p.dim != 4:
        raise InvalidArgumentError("RSFT bounds are computed for dimension 4 only")
    c = codim(p)
    if c % 2:
        raise InvalidArgumentError(f"codimension {c} is odd")
    k = c // 2
    lower, _ = l_k(omega, k)
    ws = widths(omega)
    if not is_lax(p):
        return RSFTInterval(k, lower, None, False, None, "constraint is not lax: only the lower bound applies")
    upper, _ = u_k(omega, k)
    stable = None
    if p.num_points == 1:
        stable, _ = u_k(omega, p.points[0][0] + 1)
    return RSFTInterval(k, lower, upper, ws.a == ws.b, stable)
