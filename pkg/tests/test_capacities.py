from fractions import Fraction as F

import pytest

from toricaps import domains
from toricaps.capacities import (
    CapacityReport,
    FanSolver,
    asymptotic_slope,
    asymptotic_slope_lattice,
    capacity_report,
    gh_capacity,
    gromov_width,
    l_k,
    l_k_bruteforce,
    rsft_interval,
    u_k,
)
from toricaps.errors import (
    InvalidArgumentError,
    InvalidDomainError,
    SearchBudgetExceeded,
    UnsupportedDomainError,
    UnsupportedFanError,
)
from toricaps.exactgeom import RationalPolytope
from toricaps.fan import Fan2D, divisor_of_polytope, normal_fan, refine_smooth
from toricaps.tangency import TangencyConstraint, lax_points, single_point
from toricaps.toric import anticanonical_degree, fiber_multiple, intersect_divisor, polygon_of_class

WEAK = RationalPolytope.from_points([(0, 0), (1, 0), (2, 1), (0, 1)])


def values(fn, omega, ks):
    return [fn(omega, k)[0] for k in ks]


def test_l_k_examples(square, triangle, omega4):
    assert values(l_k, square, range(1, 7)) == [1, 2, 2, 3, 3, 4]
    assert values(l_k, omega4, range(1, 6)) == [1, F(7, 4), 2, F(11, 4), 3]
    assert values(l_k, triangle, range(1, 6)) == [1, 1, 2, 2, 2]


def test_u_k_examples(omega4, rect):
    assert values(u_k, omega4, range(1, 6)) == [1, F(7, 4), 2, F(11, 4), 3]
    assert l_k(rect, 2)[0] == 2
    val, wit = u_k(rect, 2)
    assert val == 3
    assert fiber_multiple(wit) is None
    # the l_2 witness of the rectangle is the excluded double fiber
    assert fiber_multiple(l_k(rect, 2)[1]) == (1, 2)


def test_u_1_single_fiber(rect):
    val, wit = u_k(rect, 1)
    assert val == 1 and fiber_multiple(wit) == (1, 1)


def test_witnesses_are_valid(omega4, rect):
    for omega in (omega4, rect):
        for k in range(1, 9):
            for fn in (l_k, u_k):
                val, wit = fn(omega, k)
                assert intersect_divisor(wit, divisor_of_polytope(omega, wit.fan)) == val
                assert anticanonical_degree(wit) >= k + 1
                poly = polygon_of_class(wit, omega)
                assert poly.omega_length == val and poly.affine_perimeter == anticanonical_degree(wit)


def test_not_strongly_convex():
    for fn in (l_k, u_k):
        with pytest.raises(UnsupportedDomainError):
            fn(WEAK, 1)
    with pytest.raises(UnsupportedDomainError):
        gh_capacity(WEAK, 1)
    # the lattice oracle still applies to weakly convex domains
    assert l_k_bruteforce(WEAK, 1) == 1
    assert l_k_bruteforce(WEAK, 3) == 2


def test_bad_k(square):
    for k in (0, -1, True, 1.0):
        with pytest.raises(InvalidArgumentError):
            l_k(square, k)


def test_solver_fan_checks(omega4):
    with pytest.raises(UnsupportedFanError):
        FanSolver(omega4, normal_fan(omega4))  # singular
    with pytest.raises(UnsupportedFanError):
        FanSolver(omega4, Fan2D.from_rays([(1, 0), (0, 1), (-1, 0), (0, -1)]))  # misses (4, 1)


def test_bruteforce_examples(square, omega4, rect):
    assert l_k_bruteforce(square, 3) == 2
    assert l_k_bruteforce(omega4, 2) == F(7, 4)
    assert l_k_bruteforce(rect, 2, restrict_to_U=True) == 3
    assert l_k_bruteforce(rect, 1, restrict_to_U=True) == 1


def test_bruteforce_three_dim():
    cube = RationalPolytope.from_points([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    simplex = RationalPolytope.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert [l_k_bruteforce(cube, k) for k in (1, 2, 3)] == [1, 2, 2]
    # for the 6-ball the vector (1,1,1) and the padding make four terms of cost 1
    assert [l_k_bruteforce(simplex, k) for k in (1, 2, 3, 4)] == [1, 1, 1, 2]
    with pytest.raises(InvalidDomainError):
        l_k_bruteforce(cube, 2, restrict_to_U=True)


def test_bruteforce_budget(omega4):
    with pytest.raises(SearchBudgetExceeded) as err:
        l_k_bruteforce(omega4, 6, budget=100)
    assert err.value.bound is not None


def test_gh(square, triangle, omega4):
    assert [gh_capacity(omega4, k) for k in range(1, 6)] == [1, F(7, 4), F(5, 2), F(13, 4), 4]
    assert gh_capacity(square, 3) == 3
    assert gh_capacity(triangle, 4) == 2


def test_slope(square, triangle, omega4, rect):
    assert asymptotic_slope(square)[0] == F(1, 2)
    assert asymptotic_slope(triangle) == (F(1, 3), (1, 1))
    assert asymptotic_slope(omega4) == (F(1, 2), (0, 1))
    for omega in (square, triangle, omega4, rect):
        assert asymptotic_slope_lattice(omega)[0] == asymptotic_slope(omega)[0]


def test_gromov_width(square, rect, omega4):
    assert gromov_width(square) == 1
    assert gromov_width(rect) == 1
    assert gromov_width(omega4) == 1


def test_report_round_trip(omega4, rect):
    reports = capacity_report(rect, 4)
    assert [r.exact for r in reports] == [False] * 4
    assert [(r.lk, r.uk) for r in reports] == [(1, 1), (2, 3), (2, 3), (3, 4)]
    for r in capacity_report(omega4, 5) + reports:
        assert CapacityReport.from_json(r.to_json()) == r
        assert r.lk <= r.uk


def test_rsft_interval(omega4, rect):
    iv = rsft_interval(omega4, single_point(0))
    assert (iv.k, iv.lower, iv.upper, iv.exact) == (1, 1, 1, True)
    # the stable bound for ((j)) is u_{j+1}
    assert iv.stable_upper == 1
    assert rsft_interval(omega4, single_point(1)).stable_upper == F(7, 4)
    iv = rsft_interval(omega4, lax_points([0, 0]))
    assert (iv.lower, iv.upper, iv.exact, iv.stable_upper) == (F(7, 4), F(7, 4), True, None)
    iv = rsft_interval(rect, lax_points([0, 0]))
    assert (iv.lower, iv.upper, iv.exact) == (2, 3, False)
    iv = rsft_interval(omega4, TangencyConstraint(((0, 0),)))
    assert (iv.k, iv.lower, iv.upper, iv.exact) == (2, F(7, 4), None, False)
    assert iv.warning
    with pytest.raises(InvalidArgumentError):
        rsft_interval(omega4, single_point(0, 6))
