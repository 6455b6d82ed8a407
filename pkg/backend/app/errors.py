"""
Exception hierarchy.
Each error carries a stable `code` (printed by the CLI) and an optional witness.
"""

from __future__ import annotations

from typing import Any, Optional


class AlgebraError(Exception):
    """Base error for the toolkit."""

    code: str = "AlgebraError"

    def __init__(self, message: str = "", witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.witness = witness

    def describe(self) -> str:
        return f"{self.code}: {self}"


class ParseError(AlgebraError):
    """File could not be read or does not match the expected format."""

    code = "ParseError"


class SemigroupValidationError(AlgebraError):
    """Multiplication table does not define an inverse semigroup."""

    code = "InvalidSemigroup"


class MalformedTableError(SemigroupValidationError):
    code = "Malformed"


class NotAssociativeError(SemigroupValidationError):
    code = "NotAssociative"


class NotRegularError(SemigroupValidationError):
    code = "NotRegular"


class InverseNotUniqueError(SemigroupValidationError):
    code = "InverseNotUnique"


class StarMismatchError(SemigroupValidationError):
    code = "StarMismatch"


class SizeLimitError(AlgebraError):
    code = "SizeLimit"


class BadParamsError(AlgebraError):
    code = "BadParams"


class BaseMismatchError(AlgebraError):
    """Operands live on different semigroups."""

    code = "BaseMismatch"


class DimensionMismatchError(AlgebraError):
    code = "DimensionMismatch"


class NotIdempotentError(AlgebraError):
    code = "NotIdempotent"


class NotRestrictedError(AlgebraError):
    code = "NotRestricted"


class ZeroNotKilledError(AlgebraError):
    code = "ZeroNotKilled"


class NotRPDError(AlgebraError):
    """Raised by the factorization when the input fails the restricted PD test."""

    code = "NotRPD"

    def __init__(self, message: str, report: Any) -> None:
        super().__init__(message, witness=getattr(report, "witness", None))
        self.report = report


class ReconstructionFailedError(AlgebraError):
    """Factorization produced xi with xi . xi~ far from phi. Indicates a bug."""

    code = "ReconstructionFailed"


class CertificationError(AlgebraError):
    """A generator produced an output that failed its own certificate."""

    code = "CertificationFailed"
