"""
Alexander polynomials and Tristram-Levine signatures
====================================================

Everything on the knot side starts from an integral Seifert matrix.
"""

from cassonkit import RootOfUnity, knot_from_name, torus_knot_seifert_matrix, tristram_levine_signature
from cassonkit.errors import AlexanderRootError
from cassonkit.knots import signature_sum

# The trefoil and figure eight
for name in ["trefoil", "figure8"]:
    V = knot_from_name(name)
    print(f"{name:8s} Delta = {V.alexander}   Delta''(1) = {V.alexander.second_derivative_at_1()}")

# Signatures of torus knots at t = -1 come from the Kronecker-product Seifert matrix
half = RootOfUnity.of(1, 2)
for p, q in [(2, 3), (2, 5), (3, 4), (3, 5), (3, 7)]:
    V = torus_knot_seifert_matrix(p, q)
    print(f"T({p},{q}): genus {V.genus}, sigma(-1) = {tristram_levine_signature(V, half)}")

# A primitive sixth root is a zero of the trefoil polynomial, so its signature is undefined
try:
    tristram_levine_signature(knot_from_name("trefoil"), RootOfUnity.of(1, 6))
except AlexanderRootError as exc:
    print("\ntrefoil at exp(2 pi i/6):", exc)

# Summed over all nontrivial n-th roots
V = torus_knot_seifert_matrix(3, 5)
for n in [2, 4, 7]:
    print(f"T(3,5), n = {n}: sum of signatures = {signature_sum(V, n)}")
