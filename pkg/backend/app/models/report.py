"""Verdicts of the decision procedures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from app.models.function import SFunction


def complex_pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(v.real), float(v.imag)] for v in np.asarray(values, dtype=np.complex128)]


@dataclass(frozen=True)
class CheckReport:
    """
    Verdict plus numerical evidence.

    A false verdict from a Gram check ships a coefficient vector `witness` whose
    quadratic form is negative (or not real) beyond `tolerance`. Representation
    checks put the offending element indices in `elements`.
    """

    check: str
    verdict: bool
    tolerance: float
    gram_spectrum: tuple[float, ...] = ()
    witness: Optional[np.ndarray] = None
    constant: Optional[float] = None
    elements: tuple[int, ...] = ()
    # symmetry | negative_eigenvalue | range | functional | law
    violation: str = ""
    detail: str = ""

    def __bool__(self) -> bool:
        return self.verdict

    @property
    def min_eigenvalue(self) -> float:
        return self.gram_spectrum[0] if self.gram_spectrum else 0.0

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.check,
            "verdict": self.verdict,
            "spectrum": [float(v) for v in self.gram_spectrum],
            "tolerance": float(self.tolerance),
        }
        if self.witness is not None:
            out["witness"] = complex_pairs(self.witness)
        if self.constant is not None:
            out["constant"] = float(self.constant)
        if self.elements:
            out["elements"] = [int(e) for e in self.elements]
        if self.violation:
            out["violation"] = self.violation
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class GodementFactorization:
    """phi = xi . xi~ with the achieved sup-norm error."""

    xi: SFunction
    reconstruction_error: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "xi": complex_pairs(self.xi.values),
            "reconstruction_error": float(self.reconstruction_error),
        }
