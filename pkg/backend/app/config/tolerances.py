"""
Numerical thresholds for the decision procedures.
All tolerances and limits live here; service code carries no magic numbers.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GramTolerance:
    """PSD and symmetry checks on Gram matrices."""

    # eigenvalue >= -psd_relative * max(1, spectral radius)
    psd_relative: float = 1e-9
    # max |K - K^H| <= hermitian_relative * max(1, max |K|)
    hermitian_relative: float = 1e-9


@dataclass(frozen=True)
class ExtendibilityTolerance:
    """Range membership conj(u) in range(M)."""

    pinv_cutoff: float = 1e-10  # singular values below cutoff * sigma_max are dropped
    range_residual: float = 1e-8  # relative to ||u||_2


@dataclass(frozen=True)
class FactorizationTolerance:
    # ||phi - xi . xi~||_inf <= reconstruction_error * max(1, ||phi||_inf)
    reconstruction_error: float = 1e-8


@dataclass(frozen=True)
class RepresentationTolerance:
    # ||pi(x)|| <= 1 + norm_relative * max(1, ||pi(x)||)
    norm_relative: float = 1e-9
    # entrywise residual for product / star laws
    law_residual: float = 1e-10


@dataclass(frozen=True)
class LemmaTolerance:
    residual: float = 1e-10


@dataclass(frozen=True)
class SizeLimits:
    max_inverse_monoid_degree: int = 4
    max_symmetric_group_degree: int = 5


@dataclass(frozen=True)
class SuiteDefaults:
    trials: int = 200
    seed: int = 20240611
    max_tuple_length: int = 6
    chain_grid_values: tuple[int, ...] = (0, 1, 2)
    chain_grid_max_length: int = 6
    # eigenvalue a fuzzed negative instance must reach
    negative_margin: float = 1e-6


GRAM_TOL = GramTolerance()
EXTENDIBILITY_TOL = ExtendibilityTolerance()
FACTORIZATION_TOL = FactorizationTolerance()
REPRESENTATION_TOL = RepresentationTolerance()
LEMMA_TOL = LemmaTolerance()
SIZE_LIMITS = SizeLimits()
SUITE_DEFAULTS = SuiteDefaults()
