from .function import SFunction
from .operator import LinearOperator, Representation
from .report import CheckReport, GodementFactorization
from .semigroup import ElementSet, InverseSemigroup

__all__ = [
    "InverseSemigroup",
    "ElementSet",
    "SFunction",
    "LinearOperator",
    "Representation",
    "CheckReport",
    "GodementFactorization",
]
