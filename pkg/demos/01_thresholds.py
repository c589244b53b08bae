"""
Degree thresholds
=================

For a host on n vertices the parameter k is fixed by the window
(r-1)(t-1)k < n <= (r-1)(t-1)(k+1). Everything below is exact integer
arithmetic.
"""

from ramsey_goodness import GoodnessParams, degree_threshold, k_of
from ramsey_goodness.errors import WindowError

# the small case that the sweeps use most: triangles versus P_3
p = GoodnessParams.for_order(3, 3, 8)
print(p.as_dict())

# walk n through two windows for r = 3, t = 4 and watch the threshold move
print("\n n  k  x  M  threshold")
for n in range(7, 19):
    p = GoodnessParams.for_order(3, 4, n)
    print(f"{n:2d} {p.k:2d} {p.x:2d} {p.M:2d} {degree_threshold(p):6d}")

# orders at or below (r-1)(t-1) are outside every window
try:
    k_of(3, 3, 4)
except WindowError as exc:
    print("\nn=4:", exc)
