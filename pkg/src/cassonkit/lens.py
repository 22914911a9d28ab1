"""Lens space invariants: Casson-Walker invariant and the summed rho-invariant.

Lescop normalization throughout, so lambda_W(L(n, q)) is n/2 times Walker's
value.  Both quantities equal -(1/8) sum_k cot(pi q k/n) cot(pi k/n), and
that sum is 4 n s(q, n), which keeps everything rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import cotangent_pair_sum, dedekind_sum
from .errors import ConsistencyError, ValidationError
from .knots import signature_sum

# Floating values further than this from the rational target are rejected.
GUARD_BAND = 1e-6


@dataclass(frozen=True)
class LensSpace:
    n: int
    q: int

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError(f"lens space needs n >= 2, got n={self.n}")
        if not 0 < self.q < self.n:
            raise ValidationError(f"lens space needs 0 < q < n, got q={self.q}, n={self.n}")
        if math.gcd(self.n, self.q) != 1:
            raise ValidationError(f"lens space needs gcd(n, q) = 1, got ({self.n}, {self.q})")

    def __str__(self) -> str:
        return f"L({self.n},{self.q})"


def casson_walker_lens(L: LensSpace) -> Fraction:
    """lambda_W(L(n, q)) = -(n/2) s(q, n), exact."""
    return -Fraction(L.n, 2) * dedekind_sum(L.q, L.n)


def casson_walker_lens_float(L: LensSpace) -> float:
    return -cotangent_pair_sum(L.n, L.q) / 8


def rho_sum_lens(L: LensSpace) -> Fraction:
    """(1/8) sum over U(1) characters of rho_alpha(L(n, q)).

    This coincides with the Casson-Walker invariant; no per-character
    formula is used.
    """
    value = casson_walker_lens(L)
    assert (value * 4 * math.gcd(3, L.n)).denominator == 1, value
    return value


def rationalize(x: float, denominator: int, guard: float = GUARD_BAND) -> Fraction:
    """Round ``x`` to the nearest multiple of 1/denominator.

    Raises ConsistencyError if x is not within ``guard`` of that multiple.
    """
    target = Fraction(round(x * denominator), denominator)
    if abs(x - float(target)) > guard:
        raise ConsistencyError(
            f"floating value {x!r} is {abs(x - float(target)):.3e} from grid point {target}"
        )
    return target


def rho_sum_lens_float(L: LensSpace) -> Fraction:
    """Same quantity as :func:`rho_sum_lens` but via the cotangent sum.

    The exact value has denominator dividing 4 gcd(3, n), hence lies on the
    1/(8 n^2) grid used for rounding.
    """
    return rationalize(casson_walker_lens_float(L), 8 * L.n * L.n)


def rho_sum_surgered(V, L: LensSpace) -> Fraction:
    """sum_alpha rho_alpha of (n/q)-surgery on the knot ``V``.

    Each character sending the meridian to exp(2 pi i m/n) shifts the lens
    space value by -sign^{m/n}.
    """
    return 8 * rho_sum_lens(L) - signature_sum(V, L.n)
