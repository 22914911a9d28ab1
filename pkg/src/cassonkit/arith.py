"""Exact and floating arithmetic substrate.

Rationals are :class:`fractions.Fraction`.  Everything here is a pure
function of its arguments.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .errors import IndeterminateSignatureError, SingularSystemError, ValidationError

DEFAULT_TOL = 1e-9


class SignatureTriple(NamedTuple):
    positive_count: int
    negative_count: int
    zero_count: int

    @property
    def signature(self) -> int:
        return self.positive_count - self.negative_count

    @property
    def size(self) -> int:
        return self.positive_count + self.negative_count + self.zero_count


# ---------------------------------------------------------------------------
# Dedekind sums


def sawtooth(x: Fraction) -> Fraction:
    """((x)): x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def _check_coprime(q: int, n: int) -> None:
    if n < 1:
        raise ValidationError(f"modulus must be positive, got n={n}")
    if math.gcd(q, n) != 1:
        raise ValidationError(f"gcd(q, n) must be 1, got q={q}, n={n}")


def dedekind_sum_direct(q: int, n: int) -> Fraction:
    """O(n) sawtooth definition, kept as an oracle for :func:`dedekind_sum`."""
    _check_coprime(q, n)
    return sum(
        (sawtooth(Fraction(k, n)) * sawtooth(Fraction(k * q, n)) for k in range(1, n)),
        Fraction(0),
    )


def dedekind_sum(q: int, n: int) -> Fraction:
    """Dedekind sum s(q, n), computed exactly by the reciprocity recursion.

    Uses s(q, n) + s(n, q) = -1/4 + (n/q + q/n + 1/(nq))/12 together with
    periodicity in q, so the cost is that of the Euclidean algorithm.
    """
    _check_coprime(q, n)
    # running numerator/denominator, reduced once at the end
    num, den = 0, 1
    sign = 1
    q %= n
    while n > 1:
        # q >= 1 here because gcd(q, n) = 1 and n > 1
        t_den = 12 * n * q
        num = num * t_den + sign * (n * n + q * q + 1 - 3 * n * q) * den
        den *= t_den
        sign = -sign
        q, n = n % q, q
    return Fraction(num, den)


def _cot_table(n: int) -> np.ndarray:
    return 1.0 / np.tan(np.pi * np.arange(1, n) / n)


def cotangent_pair_sum(n: int, q: int) -> float:
    """Floating value of sum_{k=1}^{n-1} cot(pi q k / n) cot(pi k / n)."""
    if n < 2:
        raise ValidationError(f"need n >= 2, got n={n}")
    _check_coprime(q, n)
    c = _cot_table(n)
    idx = (q * np.arange(1, n)) % n
    return float(c[idx - 1] @ c)


def cotangent_pair_sums(n: int) -> dict[int, float]:
    """cotangent_pair_sum(n, q) for every q in (0, n) coprime to n, sharing one table."""
    if n < 2:
        raise ValidationError(f"need n >= 2, got n={n}")
    qs = np.array([q for q in range(1, n) if math.gcd(q, n) == 1])
    c = _cot_table(n)
    idx = np.outer(qs, np.arange(1, n)) % n
    sums = c[idx - 1] @ c
    return {int(q): float(v) for q, v in zip(qs, sums)}


# ---------------------------------------------------------------------------
# Signatures


def as_int_matrix(M) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in M]
    for row in rows:
        if len(row) != len(rows):
            raise ValidationError("matrix must be square")
    return rows


def _check_symmetric(rows: Sequence[Sequence]) -> None:
    size = len(rows)
    for i in range(size):
        for j in range(i + 1, size):
            if rows[i][j] != rows[j][i]:
                raise ValidationError(f"matrix is not symmetric at ({i}, {j})")


def signature_exact(M) -> SignatureTriple:
    """Inertia of an integer (or rational) symmetric matrix.

    Congruence diagonalization over the rationals.  A zero diagonal with a
    nonzero off-diagonal entry is split off as a hyperbolic 2x2 block,
    contributing one positive and one negative square.
    """
    A = [[Fraction(x) for x in row] for row in M]
    for row in A:
        if len(row) != len(A):
            raise ValidationError("matrix must be square")
    _check_symmetric(A)
    pos = neg = zero = 0
    while A:
        size = len(A)
        piv = next((i for i in range(size) if A[i][i] != 0), None)
        if piv is not None:
            d = A[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            col = [A[r][piv] for r in range(size)]
            A = [
                [A[r][c] - col[r] * col[c] / d for c in range(size) if c != piv]
                for r in range(size)
                if r != piv
            ]
            continue
        pair = next(
            ((i, j) for i in range(size) for j in range(i + 1, size) if A[i][j] != 0),
            None,
        )
        if pair is None:
            zero += size
            break
        i, j = pair
        c = A[i][j]
        pos += 1
        neg += 1
        # Schur complement of [[0, c], [c, 0]], whose inverse is [[0, 1/c], [1/c, 0]]
        keep = [r for r in range(size) if r not in pair]
        A = [
            [A[r][s] - (A[r][i] * A[j][s] + A[r][j] * A[i][s]) / c for s in keep]
            for r in keep
        ]
    return SignatureTriple(pos, neg, zero)


def signature_hermitian_numeric(H, tol: float = DEFAULT_TOL) -> SignatureTriple:
    """Eigenvalue inertia of a complex Hermitian matrix.

    H = A + iB is replaced by the real symmetric [[A, -B], [B, A]], whose
    spectrum is that of H with every eigenvalue doubled.  Eigenvalues with
    modulus at most ``tol * (1 + ||H||_inf)`` count as zero; anything within
    a factor of two of that threshold raises IndeterminateSignatureError.
    """
    H = np.asarray(H, dtype=np.complex128)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValidationError("matrix must be square")
    size = H.shape[0]
    if size == 0:
        return SignatureTriple(0, 0, 0)
    A, B = H.real, H.imag
    R = np.block([[A, -B], [B, A]])
    R = (R + R.T) / 2
    eig = np.linalg.eigvalsh(R)
    threshold = tol * (1.0 + np.linalg.norm(H, ord=np.inf))
    mags = np.abs(eig)
    ambiguous = (mags > threshold / 2) & (mags < threshold * 2)
    if ambiguous.any():
        raise IndeterminateSignatureError(
            f"eigenvalue {eig[ambiguous][0]:.3e} within a factor 2 of zero threshold {threshold:.3e}"
        )
    pos = int(np.sum(eig > threshold))
    neg = int(np.sum(eig < -threshold))
    zero = 2 * size - pos - neg
    return SignatureTriple(pos // 2, neg // 2, zero // 2)


# ---------------------------------------------------------------------------
# GF(2)


def gf2_solve(A, b) -> np.ndarray:
    """Solve A x = b over GF(2) for square invertible A."""
    A = np.array(A, dtype=np.int64) % 2
    b = np.array(b, dtype=np.int64).reshape(-1) % 2
    size = A.shape[0]
    if A.ndim != 2 or A.shape[1] != size or b.shape[0] != size:
        raise ValidationError("gf2_solve needs a square matrix and matching vector")
    aug = np.concatenate([A, b[:, None]], axis=1).astype(np.uint8)
    row = 0
    for col in range(size):
        hits = np.nonzero(aug[row:, col])[0]
        if hits.size == 0:
            continue
        p = row + hits[0]
        if p != row:
            aug[[row, p]] = aug[[p, row]]
        mask = aug[:, col].astype(bool)
        mask[row] = False
        aug[mask] ^= aug[row]
        row += 1
    if row < size:
        raise SingularSystemError(
            f"matrix is singular over GF(2), rank defect {size - row}", size - row
        )
    # full rank: reduced form is the identity
    return aug[:, size].astype(np.int64)


# ---------------------------------------------------------------------------
# Exact integer helpers


def det_exact(M) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    A = as_int_matrix(M)
    size = len(A)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, size):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[-1][-1]
