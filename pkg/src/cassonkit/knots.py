"""Seifert matrices, Alexander polynomials and Tristram-Levine signatures.

A knot is given by a Seifert matrix ``V``; the matrix is taken as ground
truth for orientation.  Mirroring a knot replaces ``V`` by ``-V.T`` and
flips the sign of every signature.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .arith import DEFAULT_TOL, det_exact, signature_hermitian_numeric
from .errors import (
    AlexanderRootError,
    ConsistencyError,
    IndeterminateSignatureError,
    ValidationError,
)

# ---------------------------------------------------------------------------
# Integer polynomials, coefficient lists from the constant term up


def _trim(p: list[int]) -> list[int]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial; stays in Z[t]."""
    b = _trim(b)
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = _trim(a)
    if len(rem) < len(b):
        return [0], rem
    quot = [0] * (len(rem) - len(b) + 1)
    for shift in range(len(rem) - len(b), -1, -1):
        c = rem[shift + len(b) - 1]
        quot[shift] = c
        if c:
            for j, y in enumerate(b):
                rem[shift + j] -= c * y
    return _trim(quot), _trim(rem[: len(b) - 1] or [0])


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValidationError(f"cyclotomic index must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod_monic(num, list(cyclotomic(d)))
            assert rem == [0]
    return tuple(num)


def _interpolate(xs: list[int], ys: list[int]) -> list[int]:
    """Exact interpolation through integer points; result must be integral."""
    size = len(xs)
    coef = [Fraction(y) for y in ys]
    # Newton divided differences
    for level in range(1, size):
        for i in range(size - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * size
    basis = [Fraction(1)]
    for i in range(size):
        for j, b in enumerate(basis):
            poly[j] += coef[i] * b
        basis = [Fraction(0)] + basis
        for j in range(len(basis) - 1):
            basis[j] -= xs[i] * basis[j + 1]
    if any(c.denominator != 1 for c in poly):
        raise ConsistencyError("interpolated determinant is not integral")
    return [int(c) for c in poly]


# ---------------------------------------------------------------------------
# Domain types


@dataclass(frozen=True)
class SymmetricLaurentPoly:
    """Delta(t) = a_0 + sum_{j >= 1} a_j (t^j + t^-j)."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients) or [0]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def at_one(self) -> int:
        a = self.coefficients
        return a[0] + 2 * sum(a[1:])

    def __call__(self, t):
        a = self.coefficients
        return a[0] + sum(a[j] * (t**j + t ** (-j)) for j in range(1, len(a)))

    def shifted(self) -> list[int]:
        """Coefficients of the honest polynomial t^d Delta(t)."""
        a = self.coefficients
        return list(reversed(a[1:])) + list(a)

    def second_derivative_at_1(self) -> int:
        return sum(2 * j * j * aj for j, aj in enumerate(self.coefficients))

    def __str__(self) -> str:
        terms = []
        for exp, c in sorted(self.laurent().items(), reverse=True):
            if c == 0:
                continue
            mono = {0: "", 1: "t"}.get(exp, f"t^{exp}")
            mag = abs(c)
            body = mono if (mono and mag == 1) else (f"{mag}{mono}" if mono else f"{mag}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for s, body in terms[1:]:
            out += f" {s} {body}"
        return out

    def laurent(self) -> dict[int, int]:
        out = {0: self.coefficients[0]}
        for j, c in enumerate(self.coefficients[1:], start=1):
            out[j] = c
            out[-j] = c
        return out


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2 pi i m / n), stored reduced; ``original_n`` remembers the input."""

    m: int
    n: int
    original_n: int = field(compare=False)

    @classmethod
    def of(cls, m: int, n: int) -> "RootOfUnity":
        if n < 1:
            raise ValidationError(f"root of unity needs n >= 1, got {n}")
        m %= n
        g = math.gcd(m, n)
        return cls(m // g, n // g, n)

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        match = re.fullmatch(r"\s*(-?\d+)\s*/\s*(\d+)\s*", text)
        if not match:
            raise ValidationError(f"expected m/n, got {text!r}")
        return cls.of(int(match.group(1)), int(match.group(2)))

    @property
    def value(self) -> complex:
        return complex(np.exp(2j * np.pi * self.m / self.n))

    @property
    def is_one(self) -> bool:
        return self.m == 0


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.float64).reshape(self.size, self.size)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    @cached_property
    def alexander(self) -> SymmetricLaurentPoly:
        return alexander_polynomial(self)


def validate_seifert(V) -> SeifertMatrix:
    rows = [[int(x) for x in row] for row in V]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValidationError("Seifert matrix must be square")
    if size % 2:
        raise ValidationError(f"Seifert matrix must have even size, got {size}")
    skew = [[rows[i][j] - rows[j][i] for j in range(size)] for i in range(size)]
    d = det_exact(skew)
    if d != 1:
        raise ValidationError(f"det(V - V^T) must be 1, got {d}")
    return SeifertMatrix(tuple(tuple(r) for r in rows))


def _coerce(V) -> SeifertMatrix:
    return V if isinstance(V, SeifertMatrix) else validate_seifert(V)


# ---------------------------------------------------------------------------
# Alexander polynomial


def alexander_polynomial(V) -> SymmetricLaurentPoly:
    """Delta(t) = t^-g det(V - t V^T), with Delta(1) = 1 and Delta(1/t) = Delta(t).

    det(V - t V^T) has degree at most 2g, so it is recovered exactly from
    its values at 2g + 1 integer points.
    """
    V = _coerce(V)
    g, size = V.genus, V.size
    if size == 0:
        return SymmetricLaurentPoly((1,))
    ent = V.entries
    xs = list(range(-g, g + 1))
    ys = [
        det_exact([[ent[i][j] - t * ent[j][i] for j in range(size)] for i in range(size)])
        for t in xs
    ]
    full = _interpolate(xs, ys)
    full += [0] * (2 * g + 1 - len(full))
    upper, lower = full[g:], full[g::-1]
    if upper != lower:
        raise ConsistencyError(f"Alexander polynomial is not symmetric: {full}")
    delta = SymmetricLaurentPoly(tuple(upper))
    if delta.at_one() != 1:
        raise ConsistencyError(f"Delta(1) = {delta.at_one()}, expected 1")
    return delta


def alexander_second_derivative_at_1(delta: SymmetricLaurentPoly) -> int:
    return delta.second_derivative_at_1()


# ---------------------------------------------------------------------------
# Signatures


def is_alexander_root(V, omega: RootOfUnity) -> bool:
    """Exact test of Delta(omega) = 0 by cyclotomic divisibility."""
    V = _coerce(V)
    if omega.is_one:
        return False
    _, rem = poly_divmod_monic(V.alexander.shifted(), list(cyclotomic(omega.n)))
    return rem == [0]


def hermitian_form(V, omega: RootOfUnity) -> np.ndarray:
    """(1 - w) V + (1 - conj w) V^T."""
    A = _coerce(V).array
    w = omega.value
    return (1 - w) * A + (1 - np.conj(w)) * A.T


def tristram_levine_signature(V, omega: RootOfUnity, tol: float = DEFAULT_TOL) -> int:
    V = _coerce(V)
    if omega.is_one or V.size == 0:
        return 0
    if is_alexander_root(V, omega):
        raise AlexanderRootError(
            f"signature jump at Alexander root exp(2 pi i {omega.m}/{omega.n})",
            m=omega.m,
            n=omega.n,
        )
    try:
        tri = signature_hermitian_numeric(hermitian_form(V, omega), tol)
    except IndeterminateSignatureError as exc:
        raise ConsistencyError(
            f"numeric signature indeterminate at {omega.m}/{omega.n} after exact pre-check: {exc}"
        ) from exc
    if tri.zero_count:
        raise ConsistencyError(
            f"form singular at {omega.m}/{omega.n} although Delta does not vanish there"
        )
    if tri.signature % 2:
        raise ConsistencyError(f"odd signature {tri.signature} at {omega.m}/{omega.n}")
    return tri.signature


def check_roots(V, n: int) -> None:
    """Raise AlexanderRootError for the first m in 1..n-1 hitting a root."""
    V = _coerce(V)
    seen: dict[tuple[int, int], bool] = {}
    for m in range(1, n):
        w = RootOfUnity.of(m, n)
        key = (w.m, w.n)
        if key not in seen:
            seen[key] = is_alexander_root(V, w)
        if seen[key]:
            raise AlexanderRootError(
                f"exp(2 pi i {m}/{n}) is a root of the Alexander polynomial (m={m})",
                m=m,
                n=n,
            )


def signature_sum(V, n: int, tol: float = DEFAULT_TOL) -> int:
    """sum_{m=0}^{n-1} sign^{m/n}, the m = 0 term being zero.

    Terms m and n - m agree, so only m <= n/2 is evaluated.
    """
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    V = _coerce(V)
    check_roots(V, n)
    total = 0
    for m in range(1, n // 2 + 1):
        s = tristram_levine_signature(V, RootOfUnity.of(m, n), tol)
        total += s if 2 * m == n else 2 * s
    return total


# ---------------------------------------------------------------------------
# Catalog


def torus_knot_seifert_matrix(p: int, q: int) -> SeifertMatrix:
    """Seifert matrix of the fiber surface of T(p, q), size (p-1)(q-1).

    The fiber is the join of p and q points; its Seifert form is minus the
    Kronecker product of the two bidiagonal blocks I - N.
    """
    if p < 2 or q < 2:
        raise ValidationError(f"torus knot needs p, q >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ValidationError(f"torus knot needs coprime (p, q), got ({p}, {q})")

    def block(k: int) -> np.ndarray:
        return np.eye(k - 1, dtype=np.int64) - np.eye(k - 1, k=1, dtype=np.int64)

    return validate_seifert(-np.kron(block(p), block(q)))


def torus_knot_alexander_closed_form(p: int, q: int) -> SymmetricLaurentPoly:
    """Normalization of (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))."""

    def xm1(k: int) -> list[int]:
        return [-1] + [0] * (k - 1) + [1]

    num = poly_mul(xm1(p * q), xm1(1))
    quot, rem = poly_divmod_monic(num, poly_mul(xm1(p), xm1(q)))
    assert rem == [0]
    g = (len(quot) - 1) // 2
    return SymmetricLaurentPoly(tuple(quot[g:]))


TREFOIL = ((-1, 1), (0, -1))
FIGURE_EIGHT = ((1, 1), (0, -1))


def knot_from_name(name: str) -> SeifertMatrix:
    key = re.sub(r"\s+", "", name).lower()
    if key == "unknot":
        return SeifertMatrix(())
    if key == "trefoil":
        return validate_seifert(TREFOIL)
    if key in ("figure8", "figure-eight", "figureeight"):
        return validate_seifert(FIGURE_EIGHT)
    match = re.fullmatch(r"torus\((\d+),(\d+)\)", key)
    if match:
        return torus_knot_seifert_matrix(int(match.group(1)), int(match.group(2)))
    raise ValidationError(f"unknown knot name {name!r}")


def knot_from_json(obj) -> SeifertMatrix:
    """Parse {"name": ...} or {"seifert_matrix": [[...], ...]}."""
    if not isinstance(obj, dict):
        raise ValidationError("knot must be a JSON object")
    if "name" in obj:
        return knot_from_name(str(obj["name"]))
    if "seifert_matrix" in obj:
        rows = obj["seifert_matrix"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValidationError("seifert_matrix must be a list of rows")
        for r in rows:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValidationError("seifert_matrix entries must be integers")
        return validate_seifert(rows)
    raise ValidationError('knot object needs "name" or "seifert_matrix"')


# ---------------------------------------------------------------------------
# Moves preserving the knot type


def stabilize(V, xi=None) -> SeifertMatrix:
    """Elementary enlargement [[V, 0, 0], [xi^T, 0, 1], [0, 0, 0]]."""
    V = _coerce(V)
    size = V.size
    xi = [0] * size if xi is None else [int(x) for x in xi]
    rows = [list(r) + [0, 0] for r in V.entries]
    rows.append(xi + [0, 1])
    rows.append([0] * (size + 2))
    return validate_seifert(rows)


def congruence(V, P) -> SeifertMatrix:
    """P^T V P for unimodular integer P."""
    V = _coerce(V)
    if V.size == 0:
        return V
    Vm = np.array(V.entries, dtype=object)
    Pm = np.array(P, dtype=object)
    return validate_seifert((Pm.T @ Vm @ Pm).tolist())
