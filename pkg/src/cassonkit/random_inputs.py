"""Seeded generators of valid inputs for the property suites."""

from __future__ import annotations

import math

import numpy as np

from .errors import AlexanderRootError
from .knots import SeifertMatrix, check_roots, congruence, knot_from_name, stabilize, validate_seifert
from .mapping_tori import FreeMappingTorusInput

CATALOG = ("unknot", "trefoil", "figure8", "torus(2,5)", "torus(3,4)", "torus(2,7)", "torus(3,5)")

COPRIME_PAIRS = tuple(
    (n, q) for n in range(2, 13) for q in range(1, n) if math.gcd(n, q) == 1
)


def random_unimodular(size: int, rng: np.random.Generator, steps: int = 4) -> list[list[int]]:
    """Product of a random signed permutation and a few elementary shears."""
    P = np.zeros((size, size), dtype=object)
    perm = rng.permutation(size)
    signs = rng.choice([-1, 1], size=size)
    for i, j in enumerate(perm):
        P[i, j] = int(signs[i])
    for _ in range(steps if size > 1 else 0):
        i, j = rng.choice(size, size=2, replace=False)
        c = int(rng.choice([-1, 1]))
        P[:, j] = P[:, j] + c * P[:, i]
    return P.tolist()


def mirror(V: SeifertMatrix) -> SeifertMatrix:
    return validate_seifert([[-V.entries[j][i] for j in range(V.size)] for i in range(V.size)])


def random_knot(
    rng: np.random.Generator,
    catalog=CATALOG,
    max_stabilizations: int = 2,
) -> SeifertMatrix:
    """A catalog knot disguised by mirroring, stabilization and a change of basis."""
    V = knot_from_name(catalog[rng.integers(len(catalog))])
    if rng.random() < 0.5:
        V = mirror(V)
    for _ in range(int(rng.integers(max_stabilizations + 1))):
        V = stabilize(V, [int(x) for x in rng.integers(-1, 2, size=V.size)])
    if V.size:
        V = congruence(V, random_unimodular(V.size, rng))
    return V


def random_free_input(rng: np.random.Generator, max_tries: int = 1000) -> FreeMappingTorusInput:
    """Random (lambda(Y), knot, n, q), redrawn until no n-th root of unity is an Alexander root."""
    for _ in range(max_tries):
        V = random_knot(rng)
        n, q = COPRIME_PAIRS[rng.integers(len(COPRIME_PAIRS))]
        casson = int(rng.integers(-5, 6))
        try:
            check_roots(V, n)
        except AlexanderRootError:
            continue
        return FreeMappingTorusInput(casson, V, n, q)
    raise RuntimeError("could not draw a root-free input")


def random_symmetric(size: int, rng: np.random.Generator, bound: int = 3) -> list[list[int]]:
    A = rng.integers(-bound, bound + 1, size=(size, size))
    return [[int(x) for x in row] for row in np.triu(A) + np.triu(A, 1).T]
