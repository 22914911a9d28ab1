"""Seifert fibered homology spheres and the Neumann-Siebenmann invariant.

Sigma(a_1, ..., a_k) is oriented as the link of a Brieskorn-Hamm
singularity, i.e. with Euler number e = -1/(a_1 ... a_k).  With this
orientation the star-shaped plumbing is negative definite and
Sigma(2, 3, 5) bounds the E8 plumbing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .arith import det_exact, gf2_solve, signature_exact
from .errors import ConsistencyError, ValidationError
from .mapping_tori import InvariantReport


@dataclass(frozen=True)
class SeifertHS:
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if not a:
            raise ValidationError("need at least one multiplicity")
        if any(x < 1 for x in a):
            raise ValidationError(f"multiplicities must be >= 1, got {a}")
        for x, y in combinations(a, 2):
            if math.gcd(x, y) != 1:
                raise ValidationError(f"multiplicities must be pairwise coprime: gcd({x}, {y}) > 1")
        object.__setattr__(self, "a", a)

    @property
    def exceptional(self) -> tuple[int, ...]:
        return tuple(x for x in self.a if x > 1)

    def __str__(self) -> str:
        return "Sigma(" + ",".join(map(str, self.a)) + ")"


@dataclass(frozen=True)
class SeifertPresentation:
    b: int
    pairs: tuple[tuple[int, int], ...]

    def euler_number(self) -> Fraction:
        return self.b + sum((Fraction(bi, ai) for ai, bi in self.pairs), Fraction(0))


@dataclass(frozen=True)
class PlumbingGraph:
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def intersection_matrix(self) -> np.ndarray:
        size = len(self.weights)
        P = np.diag(np.array(self.weights, dtype=np.int64)).reshape(size, size)
        for i, j in self.edges:
            P[i, j] = P[j, i] = 1
        return P

    @property
    def arms(self) -> list[list[int]]:
        """Weights along each arm, starting next to the center (vertex 0)."""
        nbrs: dict[int, list[int]] = {}
        for i, j in self.edges:
            nbrs.setdefault(i, []).append(j)
            nbrs.setdefault(j, []).append(i)
        out = []
        for start in nbrs.get(0, []):
            arm, prev, cur = [], 0, start
            while True:
                arm.append(self.weights[cur])
                nxt = [v for v in nbrs[cur] if v != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
            out.append(arm)
        return out


def seifert_presentation(S: SeifertHS) -> SeifertPresentation:
    """Unnormalized Seifert invariants with 0 < b_i < a_i and e = -1/prod(a_i)."""
    a = S.exceptional
    if not a:
        raise ValidationError(f"{S} has no exceptional fiber")
    total = math.prod(a)
    pairs = []
    for ai in a:
        # b_i (total / a_i) = -1 mod a_i
        bi = (-pow(total // ai, -1, ai)) % ai
        pairs.append((ai, bi))
    b = Fraction(-1, total) - sum((Fraction(bi, ai) for ai, bi in pairs), Fraction(0))
    if b.denominator != 1:
        raise ConsistencyError(f"central weight {b} is not an integer")
    return SeifertPresentation(int(b), tuple(pairs))


def hj_continued_fraction(a: int, b: int) -> list[int]:
    """a/b = c_1 - 1/(c_2 - 1/(...)) with every c_j >= 2, for a > b > 0."""
    out = []
    while b:
        c = -(-a // b)
        out.append(c)
        a, b = b, c * b - a
    return out


def plumbing_graph(P: SeifertPresentation) -> PlumbingGraph:
    weights = [P.b]
    edges = []
    for ai, bi in P.pairs:
        prev = 0
        for c in hj_continued_fraction(ai, bi):
            weights.append(-c)
            edges.append((prev, len(weights) - 1))
            prev = len(weights) - 1
    G = PlumbingGraph(tuple(weights), tuple(edges))
    d = det_exact(G.intersection_matrix.tolist())
    if abs(d) != 1:
        raise ConsistencyError(f"plumbing determinant is {d}, expected +-1")
    return G


def wu_class(G: PlumbingGraph) -> np.ndarray:
    """The 0/1 vector w with P w = diag(P) mod 2."""
    P = G.intersection_matrix
    return gf2_solve(P % 2, np.diag(P) % 2)


def mu_bar(S: SeifertHS) -> int:
    """(sign P - w.w) / 8 for the canonical plumbing P."""
    if not S.exceptional:
        return 0
    G = plumbing_graph(seifert_presentation(S))
    P = G.intersection_matrix
    w = wu_class(G)
    sig = signature_exact(P.tolist()).signature
    w2 = int(w @ P @ w)
    if (sig - w2) % 8:
        raise ConsistencyError(f"van der Blij congruence fails: sign={sig}, w.w={w2}")
    return (sig - w2) // 8


def conjugation_torus_invariants(S: SeifertHS) -> InvariantReport:
    """Invariants of the mapping torus of complex conjugation on Sigma."""
    mb = mu_bar(S)
    return InvariantReport(
        lambda_sw=Fraction(-mb),
        lambda_fo=Fraction(mb),
        breakdown={"mu_bar": Fraction(mb)},
        rohlin_mod2=mb % 2,
        notes=["moduli space is empty for the Thurston metric; lambda_SW = -mu_bar"],
    )
