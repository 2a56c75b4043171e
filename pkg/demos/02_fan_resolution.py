"""Normal fans, their resolution, and the cocharacter classes on the result.

Each inserted ray is the first Hirzebruch-Jung step of a singular cone.
The positive rays of the smooth fan generate the movable classes; their
cost and degree are what the covering knapsack optimizes.
"""

from toricaps import (
    Fan2D,
    anticanonical_degree,
    cocharacter_relation,
    example_region,
    format_rational,
    inserted_rays,
    intersect_divisor,
    divisor_of_polytope,
    normal_fan,
    refine_smooth,
)
from toricaps.fan import det

# weighted projective plane P(1,1,2): one singular cone of determinant 2
p112 = Fan2D.from_rays([(-1, 0), (1, 2), (0, -1)])
print("P(1,1,2) cones:", [(u, w, det(u, w)) for u, w in p112.cones()])
print("resolution inserts", inserted_rays(p112, refine_smooth(p112)))

omega = example_region(4)
coarse = normal_fan(omega)
fine = refine_smooth(coarse)
print("\nnormal fan of the r = 4 region:", coarse.rays)
print("smooth refinement:", fine.rays)
print("inserted:", inserted_rays(coarse, fine))

area = divisor_of_polytope(omega, fine)
print("\nray     class R_rho                          area  degree")
for r in fine.positive_rays():
    rel = cocharacter_relation(fine, r)
    print(f"{str(r):7} {str(rel.curve.as_dict()):36} {format_rational(intersect_divisor(rel, area)):>5}  {anticanonical_degree(rel):>4}")
