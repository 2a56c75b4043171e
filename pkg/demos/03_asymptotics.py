"""Linear growth of l_k.

l_k / k tends to the minimum of ||v|| / (1 + v1 + v2) over the positive
rays, and l_k stays within one ray cost of slope * k.
"""

from toricaps import asymptotic_slope, ball, example_region, format_rational, l_k, polydisk

for name, omega in (("square", polydisk(1, 1)), ("ball", ball(1)), ("rectangle 1x2", polydisk(1, 2)),
                    ("r = 4 region", example_region(4))):
    slope, ray = asymptotic_slope(omega)
    print(f"{name}: slope {format_rational(slope)} from ray {ray}")
    for k in (10, 50, 100, 200):
        v = l_k(omega, k)[0]
        print(f"   k = {k:3}  l_k = {format_rational(v):>6}  l_k - slope*k = {format_rational(v - slope * k)}")
