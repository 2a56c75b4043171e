"""Reproduce the comparison table for the quadrilateral family at r = 4.

The region is conv{0, (1,0), (3/4,1), (0,1)}.  Both widths equal 1, so the
lower and upper lattice bounds coincide and pin down the RSFT capacity.
The Gutt-Hutchings capacities are printed alongside for comparison.
"""

from fractions import Fraction

from toricaps import capacity_report, example_region, format_rational, l_k, widths

omega = example_region(4)
w = widths(omega)
print(f"domain: {omega}")
print(f"widths a = {format_rational(w.a)}, b = {format_rational(w.b)}\n")

print(f"{'k':>2}  {'l_k':>5}  {'u_k':>5}  {'GH_k':>5}  witness")
for rep in capacity_report(omega, 8):
    wit = ", ".join(f"{r}:{m}" for r, m in rep.lk_witness.as_dict().items())
    print(f"{rep.k:>2}  {format_rational(rep.lk):>5}  {format_rational(rep.uk):>5}  {format_rational(rep.gh):>5}  {wit}")

# The even terms follow (k - 2)/2 + (2r - 1)/r, the odd ones (k + 1)/2.
print("\nclosed form check for r = 2..6:")
for r in range(2, 7):
    om = example_region(r)
    ok = all(
        l_k(om, k)[0] == (Fraction(k + 1, 2) if k % 2 else Fraction(k - 2, 2) + Fraction(2 * r - 1, r))
        for k in range(1, 21)
    )
    print(f"  r = {r}: {'matches' if ok else 'differs'}")
