"""
Plumbings and the Neumann-Siebenmann invariant
==============================================

Seifert fibered homology spheres bound negative definite star-shaped
plumbings. The Wu class of the plumbing gives mu-bar.
"""

from cassonkit import SeifertHS, mu_bar
from cassonkit.arith import signature_exact
from cassonkit.seifert import conjugation_torus_invariants, plumbing_graph, seifert_presentation, wu_class

for a in [(2, 3, 5), (2, 3, 7), (2, 3, 11), (2, 5, 7), (3, 4, 5)]:
    S = SeifertHS(a)
    G = plumbing_graph(seifert_presentation(S))
    sig = signature_exact(G.intersection_matrix.tolist())
    print(f"Sigma{a}: weights {G.weights}")
    print(f"    signature {sig.signature}, Wu class {wu_class(G).tolist()}, mu-bar {mu_bar(S)}")

# The Poincare sphere plumbing is the negative E8 form
rep = conjugation_torus_invariants(SeifertHS((2, 3, 5)))
print(f"\nconjugation torus over Sigma(2,3,5): SW {rep.lambda_sw}, FO {rep.lambda_fo}, rohlin {rep.rohlin_mod2}")
