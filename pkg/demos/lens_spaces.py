"""
Casson-Walker invariants of lens spaces
=======================================

Two routes to the same rational number: an exact Dedekind sum, and a
floating cotangent sum that is snapped back onto its rational grid.
"""

import math

from cassonkit import LensSpace, casson_walker_lens, dedekind_sum
from cassonkit.lens import casson_walker_lens_float, rho_sum_lens_float

# A few small lens spaces, exact values first
for n, q in [(2, 1), (3, 1), (5, 1), (5, 2), (7, 2), (7, 3)]:
    L = LensSpace(n, q)
    print(f"L({n},{q}):  s(q,n) = {dedekind_sum(q, n)!s:>8}   lambda_W = {casson_walker_lens(L)}")

# The floating route drifts a little, but stays far inside the guard band
worst = 0.0
for n in range(2, 301):
    for q in range(1, n):
        if math.gcd(n, q) == 1:
            L = LensSpace(n, q)
            worst = max(worst, abs(casson_walker_lens_float(L) - float(casson_walker_lens(L))))
print(f"\nlargest float error for n <= 300: {worst:.2e}")

# and rationalizing it recovers the exact value
L = LensSpace(97, 35)
print(f"L(97,35): exact {casson_walker_lens(L)}, from floats {rho_sum_lens_float(L)}")
