"""Application configuration."""

from .main import Settings, get_settings, settings
from .tolerances import (
    EXTENDIBILITY_TOL,
    FACTORIZATION_TOL,
    GRAM_TOL,
    LEMMA_TOL,
    REPRESENTATION_TOL,
    SIZE_LIMITS,
    SUITE_DEFAULTS,
)

__all__ = [
    "Settings",
    "settings",
    "get_settings",
    "GRAM_TOL",
    "EXTENDIBILITY_TOL",
    "FACTORIZATION_TOL",
    "REPRESENTATION_TOL",
    "LEMMA_TOL",
    "SIZE_LIMITS",
    "SUITE_DEFAULTS",
]
