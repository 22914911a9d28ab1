"""lambda_SW and lambda_FO of mapping tori of finite order diffeomorphisms.

Three families are covered:

* free actions, where the quotient is (n/q)-surgery on a knot in a homology
  sphere Y;
* branched actions, quotient a homology sphere with a branch knot
  (lambda_FO only);
* products S^1 x Sigma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import ConsistencyError, ValidationError
from .knots import SeifertMatrix, signature_sum, validate_seifert
from .lens import LensSpace, casson_walker_lens, casson_walker_lens_float, rho_sum_lens_float

NOT_INTEGRAL = "n/a"
NON_INTEGRAL_WARNING = (
    "lambda_SW is not an integer: the input cannot come from a free action "
    "on an integral homology sphere, so no Rohlin invariant is reported"
)

RohlinValue = Union[int, str]


@dataclass(frozen=True)
class FreeMappingTorusInput:
    ambient_casson: int
    knot: SeifertMatrix
    n: int
    q: int

    def __post_init__(self):
        if not isinstance(self.knot, SeifertMatrix):
            object.__setattr__(self, "knot", validate_seifert(self.knot))
        self.lens  # validates (n, q)

    @property
    def lens(self) -> LensSpace:
        return LensSpace(self.n, self.q)


@dataclass(frozen=True)
class BranchedMappingTorusInput:
    quotient_casson: int
    branch_knot: SeifertMatrix
    n: int

    def __post_init__(self):
        if not isinstance(self.branch_knot, SeifertMatrix):
            object.__setattr__(self, "branch_knot", validate_seifert(self.branch_knot))
        if self.n < 2:
            raise ValidationError(f"branched cover degree must be >= 2, got n={self.n}")


@dataclass
class InvariantReport:
    lambda_sw: Fraction | None
    lambda_fo: Fraction | None
    breakdown: dict[str, Fraction] = field(default_factory=dict)
    rohlin_mod2: RohlinValue = NOT_INTEGRAL
    warnings: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    diagnostics: dict[str, float] = field(default_factory=dict)

    @property
    def integral(self) -> bool:
        return self.lambda_sw is not None and Fraction(self.lambda_sw).denominator == 1


def rohlin_mod2(lambda_sw) -> RohlinValue:
    """Parity of an integral lambda_SW, or "n/a" for a non-integral value."""
    value = Fraction(lambda_sw)
    if value.denominator != 1:
        return NOT_INTEGRAL
    return value.numerator % 2


def lambda_fo_free(inp: FreeMappingTorusInput) -> Fraction:
    delta = inp.knot.alexander
    return (
        inp.n * Fraction(inp.ambient_casson)
        + Fraction(signature_sum(inp.knot, inp.n), 8)
        + Fraction(inp.q, 2) * delta.second_derivative_at_1()
    )


def lambda_sw_free(inp: FreeMappingTorusInput) -> InvariantReport:
    """Evaluate all five terms of the lambda_SW formula for a free mapping torus.

    The Casson-Walker term goes through exact Dedekind sums and the rho-sum
    term through the floating cotangent sum, so their cancellation checks
    one pipeline against the other.
    """
    L = inp.lens
    sig = signature_sum(inp.knot, inp.n)
    breakdown = {
        "casson": -inp.n * Fraction(inp.ambient_casson),
        "signature_sum": -Fraction(sig, 8),
        "alexander": -Fraction(inp.q, 2) * inp.knot.alexander.second_derivative_at_1(),
        "lens_casson_walker": -casson_walker_lens(L),
        "lens_rho_sum": rho_sum_lens_float(L),
    }
    if breakdown["lens_casson_walker"] + breakdown["lens_rho_sum"] != 0:
        raise ConsistencyError(
            f"lens-term cancellation failure for {L}: "
            f"{breakdown['lens_casson_walker']} + {breakdown['lens_rho_sum']} != 0"
        )
    lam_sw = sum(breakdown.values(), Fraction(0))
    report = InvariantReport(
        lambda_sw=lam_sw,
        lambda_fo=lambda_fo_free(inp),
        breakdown=breakdown,
        rohlin_mod2=rohlin_mod2(lam_sw),
        diagnostics={"float_lens_cotangent": casson_walker_lens_float(L)},
    )
    if not report.integral:
        report.warnings.append(NON_INTEGRAL_WARNING)
    return report


def lambda_fo_branched(inp: BranchedMappingTorusInput) -> Fraction:
    return inp.n * Fraction(inp.quotient_casson) + Fraction(
        signature_sum(inp.branch_knot, inp.n), 8
    )


def branched_report(inp: BranchedMappingTorusInput) -> InvariantReport:
    sig = signature_sum(inp.branch_knot, inp.n)
    breakdown = {
        "casson": inp.n * Fraction(inp.quotient_casson),
        "signature_sum": Fraction(sig, 8),
    }
    return InvariantReport(
        lambda_sw=None,
        lambda_fo=lambda_fo_branched(inp),
        breakdown=breakdown,
        warnings=["lambda_SW has no closed formula for general branched mapping tori"],
    )


def lambda_sw_product(casson_sigma: int) -> int:
    """lambda_SW(S^1 x Sigma) = -lambda(Sigma)."""
    return -int(casson_sigma)


def casson_one_over_q_surgery(ambient_casson: int, V, q: int) -> int:
    """Casson invariant of 1/q surgery on a knot: lambda(Y) + (q/2) Delta''(1)."""
    if q == 0:
        raise ValidationError("1/q surgery needs q != 0")
    if not isinstance(V, SeifertMatrix):
        V = validate_seifert(V)
    d2 = V.alexander.second_derivative_at_1()
    return int(ambient_casson) + q * d2 // 2


def check_conjecture(inp: FreeMappingTorusInput) -> tuple[bool, InvariantReport]:
    report = lambda_sw_free(inp)
    return lambda_fo_free(inp) + report.lambda_sw == 0, report
