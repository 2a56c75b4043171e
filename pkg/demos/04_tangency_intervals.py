"""Bounds for RSFT capacities with tangency constraints.

A lax constraint of codimension 2k is bounded below by l_k and above by
u_k.  When the two widths agree the interval collapses.  For the
rectangle [0,1] x [0,2] the double fiber gives the lower bound but is not
admissible for the upper one, so the interval stays open.
"""

from toricaps import TangencyConstraint, codim, example_region, format_rational, lax_points, polydisk, rsft_interval
from toricaps.tangency import single_point

fmt = lambda x: "-" if x is None else format_rational(x)  # noqa: E731

constraints = [single_point(0), single_point(2), lax_points([0, 0]), lax_points([0, 1, 1]), TangencyConstraint(((0, 1),))]
for name, omega in (("r = 4 region", example_region(4)), ("rectangle 1x2", polydisk(1, 2))):
    print(name)
    for p in constraints:
        iv = rsft_interval(omega, p)
        extra = f" stable <= {fmt(iv.stable_upper)}" if iv.stable_upper is not None else ""
        note = f" ({iv.warning})" if iv.warning else ""
        print(f"   {str(p.points):18} codim {codim(p):2}  [{fmt(iv.lower)}, {fmt(iv.upper)}]"
              f"  exact={iv.exact}{extra}{note}")
