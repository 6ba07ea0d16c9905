"""How the gap around 1 tracks 2|alpha_M| as the degree grows.

For alpha_n = -(n+2)^(-1/4) the first zero angle divided by 2|alpha_M|
drifts down toward 1; the certified finite-degree bound keeps the ratio
above 1 at every M.  Locating a single zero costs O(M) per bisection step,
so M = 10^5 takes well under a second.
"""

import math
import time

from popuc import VerblunskySequence, nearest_zero_to_one

seq = VerblunskySequence.power_law(1, 0.25)

print(f"{'M':>8} {'arg zeta_1':>12} {'2|f(M)|':>10} {'ratio':>10} {'seconds':>8}")
for m in (10**3, 10**4, 10**5):
    t0 = time.time()
    arg1 = nearest_zero_to_one(seq, m, -1.0, side="ccw")
    dt = time.time() - t0
    two_f = 2.0 * (m + 2.0) ** -0.25
    print(f"{m:>8} {arg1:>12.8f} {two_f:>10.6f} {arg1 / two_f:>10.6f} {dt:>8.2f}")

print()
print("clockwise side, by the conjugation symmetry of real coefficients:")
m = 10**4
ccw = nearest_zero_to_one(seq, m, -1.0, side="ccw")
cw = nearest_zero_to_one(seq, m, -1.0, side="cw")
print(f"  arg zeta_1 = {ccw:.12f}")
print(f"  2*pi - arg zeta_M = {2 * math.pi - cw:.12f}")
print(f"  difference = {abs(ccw - (2 * math.pi - cw)):.2e}")
