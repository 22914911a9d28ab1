from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cassonkit.errors import AlexanderRootError, ValidationError
from cassonkit.knots import SeifertMatrix, knot_from_name
from cassonkit.mapping_tori import (
    NOT_INTEGRAL,
    BranchedMappingTorusInput,
    FreeMappingTorusInput,
    branched_report,
    casson_one_over_q_surgery,
    check_conjecture,
    lambda_fo_branched,
    lambda_fo_free,
    lambda_sw_free,
    lambda_sw_product,
    rohlin_mod2,
)
from cassonkit.random_inputs import COPRIME_PAIRS, random_free_input

UNKNOT = SeifertMatrix(())


def free(casson, knot, n, q):
    return FreeMappingTorusInput(casson, knot_from_name(knot), n, q)


@pytest.mark.parametrize(
    "args, expected",
    [
        ((0, "unknot", 5, 1), Fraction(0)),
        # 0 + (-2)/8 + (1/2) * 2
        ((0, "trefoil", 2, 1), Fraction(3, 4)),
        ((1, "unknot", 3, 2), Fraction(3)),
    ],
)
def test_lambda_fo_free_examples(args, expected):
    assert lambda_fo_free(free(*args)) == expected


def test_lambda_sw_free_examples():
    rep = lambda_sw_free(free(0, "unknot", 5, 1))
    assert rep.lambda_sw == 0 and rep.integral and rep.rohlin_mod2 == 0 and not rep.warnings

    rep = lambda_sw_free(free(0, "trefoil", 2, 1))
    assert rep.lambda_sw == Fraction(-3, 4)
    assert not rep.integral
    assert rep.rohlin_mod2 == NOT_INTEGRAL
    assert rep.warnings

    rep = lambda_sw_free(free(-1, "unknot", 2, 1))
    assert rep.lambda_sw == 2 and rep.rohlin_mod2 == 0


def test_breakdown_terms():
    rep = lambda_sw_free(free(2, "trefoil", 5, 2))
    b = rep.breakdown
    assert set(b) == {"casson", "signature_sum", "alexander", "lens_casson_walker", "lens_rho_sum"}
    assert b["casson"] == -10
    assert b["alexander"] == -2
    assert b["lens_casson_walker"] == -b["lens_rho_sum"]
    assert sum(b.values()) == rep.lambda_sw
    assert all(k.startswith("float_") for k in rep.diagnostics)


def test_alexander_root_propagates():
    with pytest.raises(AlexanderRootError):
        lambda_sw_free(free(0, "trefoil", 6, 1))
    with pytest.raises(AlexanderRootError):
        lambda_fo_free(free(0, "trefoil", 12, 5))


def test_input_validation():
    with pytest.raises(ValidationError):
        FreeMappingTorusInput(0, UNKNOT, 4, 2)
    with pytest.raises(ValidationError):
        FreeMappingTorusInput(0, [[1, 0], [0, 1]], 3, 1)
    with pytest.raises(ValidationError):
        BranchedMappingTorusInput(0, UNKNOT, 1)


@pytest.mark.parametrize(
    "args, expected",
    [((0, "unknot", 3), Fraction(0)), ((0, "torus(3,5)", 2), Fraction(-1)), ((2, "unknot", 3), Fraction(6))],
)
def test_lambda_fo_branched_examples(args, expected):
    casson, knot, n = args
    inp = BranchedMappingTorusInput(casson, knot_from_name(knot), n)
    assert lambda_fo_branched(inp) == expected
    assert branched_report(inp).lambda_fo == expected


def test_product_and_surgery():
    assert lambda_sw_product(0) == 0
    assert lambda_sw_product(-1) == 1
    assert lambda_sw_product(7) == -7
    tre = knot_from_name("trefoil")
    assert casson_one_over_q_surgery(0, UNKNOT, 5) == 0
    assert casson_one_over_q_surgery(0, tre, 1) == 1
    assert casson_one_over_q_surgery(0, tre, -1) == -1
    with pytest.raises(ValidationError):
        casson_one_over_q_surgery(0, tre, 0)


def test_rohlin_mod2():
    assert rohlin_mod2(0) == 0
    assert rohlin_mod2(-1) == 1
    assert rohlin_mod2(Fraction(3, 4)) == NOT_INTEGRAL


@pytest.mark.parametrize("args", [(0, "unknot", 5, 1), (0, "trefoil", 2, 1), (-1, "torus(3,5)", 7, 3)])
def test_check_conjecture_examples(args):
    ok, rep = check_conjecture(free(*args))
    assert ok
    assert rep.lambda_sw + rep.lambda_fo == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_cancellation_and_structure(seed):
    inp = random_free_input(np.random.default_rng(seed))
    ok, rep = check_conjecture(inp)
    assert ok
    assert (lambda_fo_free(inp) * 8).denominator == 1
    shifted = FreeMappingTorusInput(inp.ambient_casson + 1, inp.knot, inp.n, inp.q)
    assert lambda_fo_free(shifted) - lambda_fo_free(inp) == inp.n


@pytest.mark.parametrize("n, q", COPRIME_PAIRS)
def test_unknot_degeneracy(n, q):
    for casson in (-3, 0, 4):
        assert lambda_sw_free(FreeMappingTorusInput(casson, UNKNOT, n, q)).lambda_sw == -n * casson
