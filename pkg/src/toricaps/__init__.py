"""Exact lattice capacity bounds for strongly convex toric domains in dimension four."""

from .capacities import (
    CapacityReport,
    CoveringTable,
    FanSolver,
    RSFTInterval,
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
from .domains import ball, ellipsoid, example_region, polydisk, random_strongly_convex, random_superset
from .errors import (
    DegenerateDomainError,
    InvalidArgumentError,
    InvalidDomainError,
    NotMovableError,
    SearchBudgetExceeded,
    ToricapsError,
    UnsupportedDomainError,
    UnsupportedFanError,
)
from .exactgeom import (
    Rational,
    RationalPolytope,
    Widths,
    axis_widths,
    contains,
    edge_normals,
    format_rational,
    is_strongly_convex,
    parse_rational,
    scale,
    support_value,
    widths,
)
from .fan import (
    DivisorOnFan,
    Fan2D,
    divisor_of_polytope,
    inserted_rays,
    is_smooth,
    normal_fan,
    refine_smooth,
    resolution_ray,
    star_subdivide,
    support_eval,
)
from .tangency import TangencyConstraint, catenate, codim, is_lax, lax_points, single_point, union
from .toric import (
    ClassPolygon,
    CocharacterRelation,
    CurveClass,
    anticanonical_degree,
    cocharacter_relation,
    compose_movable,
    fiber_multiple,
    intersect_divisor,
    movable_decompose,
    polygon_of_class,
)

__version__ = "0.1.0"
