import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from cassonkit.arith import det_exact, signature_exact
from cassonkit.errors import ValidationError
from cassonkit.knots import signature_sum, torus_knot_seifert_matrix
from cassonkit.seifert import (
    PlumbingGraph,
    SeifertHS,
    conjugation_torus_invariants,
    hj_continued_fraction,
    mu_bar,
    plumbing_graph,
    seifert_presentation,
    wu_class,
)

BRIESKORN = [(2, 3), (2, 3, 5), (2, 3, 7), (2, 3, 11), (2, 3, 13), (2, 5, 7), (3, 4, 5), (2, 3, 5, 7), (2, 7, 9)]


def brute_presentation(a):
    """Search all 0 < b_i < a_i for integral b with b + sum b_i/a_i = -1/prod(a)."""
    target = Fraction(-1, math.prod(a))
    for bs in itertools.product(*(range(1, x) for x in a)):
        b = target - sum(Fraction(bi, ai) for ai, bi in zip(a, bs))
        if b.denominator == 1:
            yield int(b), tuple(zip(a, bs))


def brute_wu(P):
    size = len(P)
    diag = np.diag(P) % 2
    return [
        np.array(w) for w in itertools.product((0, 1), repeat=size)
        if np.array_equal((P @ np.array(w)) % 2, diag)
    ]


def evaluate_hj(cs):
    x = Fraction(cs[-1])
    for c in reversed(cs[:-1]):
        x = c - 1 / x
    return x


def test_validation():
    with pytest.raises(ValidationError):
        SeifertHS((2, 4, 5))
    with pytest.raises(ValidationError):
        SeifertHS((0, 3))
    with pytest.raises(ValidationError):
        seifert_presentation(SeifertHS((1, 1)))


@pytest.mark.parametrize(
    "a, b, pairs",
    [
        ((2, 3, 5), -2, ((2, 1), (3, 2), (5, 4))),
        ((2, 3, 7), -1, ((2, 1), (3, 1), (7, 1))),
        ((2, 3), -1, ((2, 1), (3, 1))),
    ],
)
def test_presentation_examples(a, b, pairs):
    P = seifert_presentation(SeifertHS(a))
    assert (P.b, P.pairs) == (b, pairs)
    assert P.euler_number() == Fraction(-1, math.prod(a))


@pytest.mark.parametrize("a", BRIESKORN)
def test_presentation_unique_and_matches_brute_force(a):
    found = list(brute_presentation(a))
    assert len(found) == 1
    P = seifert_presentation(SeifertHS(a))
    assert found[0] == (P.b, P.pairs)


def test_continued_fractions():
    assert hj_continued_fraction(5, 4) == [2, 2, 2, 2]
    assert hj_continued_fraction(7, 1) == [7]
    assert hj_continued_fraction(7, 3) == [3, 2, 2]
    for a in range(2, 30):
        for b in range(1, a):
            if math.gcd(a, b) == 1:
                cs = hj_continued_fraction(a, b)
                assert all(c >= 2 for c in cs)
                assert evaluate_hj(cs) == Fraction(a, b)


def test_plumbing_examples():
    e8 = plumbing_graph(seifert_presentation(SeifertHS((2, 3, 5))))
    assert e8.weights == (-2,) * 8
    assert sorted(len(arm) for arm in e8.arms) == [1, 2, 4]
    assert abs(det_exact(e8.intersection_matrix.tolist())) == 1

    g237 = plumbing_graph(seifert_presentation(SeifertHS((2, 3, 7))))
    assert g237.weights == (-1, -2, -3, -7)
    assert g237.arms == [[-2], [-3], [-7]]

    g23 = plumbing_graph(seifert_presentation(SeifertHS((2, 3))))
    assert g23.weights == (-1, -2, -3)
    assert abs(round(np.linalg.det(g23.intersection_matrix))) == 1


def test_wu_examples():
    e8 = plumbing_graph(seifert_presentation(SeifertHS((2, 3, 5))))
    assert list(wu_class(e8)) == [0] * 8
    g237 = plumbing_graph(seifert_presentation(SeifertHS((2, 3, 7))))
    assert list(wu_class(g237)) == [0, 1, 1, 1]
    assert list(wu_class(PlumbingGraph((-1,), ()))) == [1]


@pytest.mark.parametrize("a", BRIESKORN)
def test_plumbing_invariants(a):
    G = plumbing_graph(seifert_presentation(SeifertHS(a)))
    P = G.intersection_matrix
    assert abs(det_exact(P.tolist())) == 1
    # Wu class by brute force over all 0/1 vectors
    (w,) = brute_wu(P)
    assert np.array_equal(wu_class(G), w)
    sig = signature_exact(P.tolist())
    assert sig.negative_count == len(G.weights)
    assert np.all(np.linalg.eigvalsh(P.astype(float)) < 0)
    assert (sig.signature - int(w @ P @ w)) % 8 == 0


@pytest.mark.parametrize("a, expected", [((2, 3), 0), ((2, 3, 5), -1), ((2, 3, 7), 1), ((5,), 0), ((1, 1, 1), 0)])
def test_mu_bar_examples(a, expected):
    assert mu_bar(SeifertHS(a)) == expected


def test_mu_bar_ignores_unit_multiplicities():
    assert mu_bar(SeifertHS((2, 1, 3, 1, 5))) == mu_bar(SeifertHS((2, 3, 5)))


@pytest.mark.parametrize("a", BRIESKORN)
def test_mu_bar_permutation_invariant(a):
    values = {mu_bar(SeifertHS(p)) for p in itertools.permutations(a)}
    assert len(values) == 1


@pytest.mark.parametrize("q, r", [(3, 5), (3, 7), (3, 11), (5, 7)])
def test_rohlin_bridge(q, r):
    sig = signature_sum(torus_knot_seifert_matrix(q, r), 2)
    assert sig % 8 == 0
    assert (mu_bar(SeifertHS((2, q, r))) - sig // 8) % 2 == 0


@pytest.mark.parametrize(
    "a, sw, fo, rohlin", [((2, 3, 5), 1, -1, 1), ((2, 3), 0, 0, 0), ((2, 3, 7), -1, 1, 1)]
)
def test_conjugation_torus(a, sw, fo, rohlin):
    rep = conjugation_torus_invariants(SeifertHS(a))
    assert (rep.lambda_sw, rep.lambda_fo, rep.rohlin_mod2) == (sw, fo, rohlin)
    assert rep.lambda_sw + rep.lambda_fo == 0
    assert rep.integral
