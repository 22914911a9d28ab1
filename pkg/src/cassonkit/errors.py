"""Exception classes with stable machine-readable codes."""

from __future__ import annotations


class CassonKitError(Exception):
    code = "error"
    exit_code = 1


class ValidationError(CassonKitError, ValueError):
    """Input violates a documented invariant."""

    code = "validation"
    exit_code = 2


class AlexanderRootError(CassonKitError, ArithmeticError):
    """A required root of unity is a root of the Alexander polynomial.

    The Tristram-Levine signature jumps there, so none of the mapping
    torus formulas is defined.
    """

    code = "alexander_root"
    exit_code = 3

    def __init__(self, message: str, m: int | None = None, n: int | None = None):
        super().__init__(message)
        self.m = m
        self.n = n


class IndeterminateSignatureError(CassonKitError, ArithmeticError):
    """An eigenvalue sits too close to the zero threshold to classify."""

    code = "indeterminate_signature"
    exit_code = 4


class SingularSystemError(CassonKitError, ArithmeticError):
    code = "singular_system"
    exit_code = 4

    def __init__(self, message: str, rank_defect: int):
        super().__init__(message)
        self.rank_defect = rank_defect


class ConsistencyError(CassonKitError, AssertionError):
    """Two independent pipelines disagree. Always a bug."""

    code = "consistency"
    exit_code = 4
