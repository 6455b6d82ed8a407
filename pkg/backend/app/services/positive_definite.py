"""
Decision procedures for positive definite (P), restricted positive definite
(P_r) and extendible restricted positive definite (P_{r,e}) functions, the
extension-by-zero correspondence with S_r, and the square-root factorization
phi = xi . xi~.

Every decision reduces to the full Gram matrix over the element list: a finite
tuple (with repetitions) x_1..x_m and coefficients c give the quadratic form
d^H K d where d aggregates c over repeated elements, so positivity of the full
form covers every tuple.
"""

from __future__ import annotations

import logging
import math
from typing import Optional, Sequence

import numpy as np

from app.config import EXTENDIBILITY_TOL, FACTORIZATION_TOL, GRAM_TOL
from app.errors import BaseMismatchError, CertificationError, NotRPDError, ReconstructionFailedError
from app.models.function import SFunction
from app.models.report import CheckReport, GodementFactorization
from app.models.semigroup import InverseSemigroup
from app.services.constructors import adjoin_identity
from app.services.function_algebra import (
    algebra_identity,
    norm_p,
    restricted_convolve,
    tilde_involution,
)
from app.services.representations import lambda_r_apply, lift_rho
from app.services.semigroup_core import natural_order, restricted_semigroup

logger = logging.getLogger(__name__)


# --- Gram matrices ---


def gram_pd(u: SFunction) -> np.ndarray:
    """K[i, j] = u(x_i* x_j)."""
    S = u.base
    return u.values[S.table[S.star]]


def gram_rpd(u: SFunction) -> np.ndarray:
    """M[i, j] = u(x_i* x_j) if x_i x_i* = x_j x_j*, else 0."""
    return np.where(u.base.same_range, gram_pd(u), 0.0)


def _hermitian_defect(K: np.ndarray, tol: float) -> tuple[float, tuple[int, int]]:
    """Largest |K - K^H| entry; a non-real diagonal entry is reported first."""
    D = np.abs(K - K.conj().T)
    diag = np.diagonal(D)
    if diag.max() > tol:
        i = int(diag.argmax())
        return float(diag[i]), (i, i)
    i, j = np.unravel_index(int(D.argmax()), D.shape)
    return float(D[i, j]), (int(i), int(j))


def _symmetry_witness(K: np.ndarray, i: int, j: int) -> np.ndarray:
    """A vector c whose form c^H K c has a nonzero imaginary part."""
    c = np.zeros(K.shape[0], dtype=np.complex128)
    c[i] = 1.0
    if i == j:
        return c
    d = K[i, j] - np.conj(K[j, i])
    c[j] = 1.0 if abs(d.imag) >= abs(d.real) else 1j
    return c / np.linalg.norm(c)


def _spectrum(K: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    H = (K + K.conj().T) / 2
    return np.linalg.eigh(H)


def _psd_tolerance(eigenvalues: np.ndarray, tol: Optional[float]) -> float:
    if tol is not None:
        return float(tol)
    radius = float(np.max(np.abs(eigenvalues), initial=0.0))
    return GRAM_TOL.psd_relative * max(1.0, radius)


def _hermitian_tolerance(K: np.ndarray) -> float:
    return GRAM_TOL.hermitian_relative * max(1.0, float(np.max(np.abs(K), initial=0.0)))


def decide_gram(K: np.ndarray, check: str, tol: Optional[float] = None) -> CheckReport:
    """Hermitian and min eigenvalue >= -tol. No symmetrization of the input."""
    w, V = _spectrum(K)
    tolerance = _psd_tolerance(w, tol)
    spectrum = tuple(float(v) for v in w)

    herm_tol = _hermitian_tolerance(K)
    defect, (i, j) = _hermitian_defect(K, herm_tol)
    if defect > herm_tol:
        return CheckReport(
            check,
            False,
            tolerance,
            gram_spectrum=spectrum,
            witness=_symmetry_witness(K, i, j),
            violation="symmetry",
            detail=f"Gram matrix not Hermitian at ({i}, {j}), defect {defect:.3g}",
        )
    if w.size and w[0] < -tolerance:
        return CheckReport(
            check,
            False,
            tolerance,
            gram_spectrum=spectrum,
            witness=V[:, 0].copy(),
            violation="negative_eigenvalue",
            detail=f"min eigenvalue {w[0]:.6g}",
        )
    return CheckReport(check, True, tolerance, gram_spectrum=spectrum)


def is_pd(u: SFunction, tol: Optional[float] = None) -> CheckReport:
    """u in P(S)."""
    return decide_gram(gram_pd(u), "pd", tol)


def is_rpd(u: SFunction, tol: Optional[float] = None) -> CheckReport:
    """u in P_r(S)."""
    return decide_gram(gram_rpd(u), "rpd", tol)


# --- extendibility ---


def _decide_extendible(K: np.ndarray, u: SFunction, check: str, tol: Optional[float]) -> CheckReport:
    report = decide_gram(K, check, tol)
    if not report.verdict:
        return report

    defect = float(np.max(np.abs(u.values - tilde_involution(u).values), initial=0.0))
    if defect > _hermitian_tolerance(K):
        # unreachable when K is Hermitian: K holds u(w) and u(w*) at mirrored places
        raise CertificationError(f"Hermitian Gram but u != u~ (defect {defect:.3g})")

    w, V = _spectrum(K)
    keep = w > EXTENDIBILITY_TOL.pinv_cutoff * float(np.max(np.abs(w), initial=0.0))
    v_bar = np.conj(u.values)
    coords = V[:, keep].conj().T @ v_bar
    projection = V[:, keep] @ coords
    residual = v_bar - projection
    limit = EXTENDIBILITY_TOL.range_residual * float(np.linalg.norm(u.values))
    residual_norm = float(np.linalg.norm(residual))
    if residual_norm > limit:
        return CheckReport(
            check,
            False,
            report.tolerance,
            gram_spectrum=report.gram_spectrum,
            witness=residual / residual_norm,
            violation="range",
            detail=f"conj(u) not in range of Gram matrix, residual {residual_norm:.3g}",
        )
    constant = float(np.sum(np.abs(coords) ** 2 / w[keep]))
    return CheckReport(
        check,
        True,
        report.tolerance,
        gram_spectrum=report.gram_spectrum,
        constant=constant,
    )


def is_extendible_rpd(u: SFunction, tol: Optional[float] = None) -> CheckReport:
    """
    u in P_{r,e}(S): u = u~, M = gram_rpd(u) PSD and conj(u) in range(M).
    constant is the least c with |sum c_i u(x_i)|^2 <= c * (restricted form).
    """
    return _decide_extendible(gram_rpd(u), u, "extendible_rpd", tol)


def is_extendible_pd(v: SFunction, tol: Optional[float] = None) -> CheckReport:
    """v in P_e(T) for an arbitrary finite inverse semigroup T."""
    return _decide_extendible(gram_pd(v), v, "extendible_pd", tol)


# --- definitional forms over explicit tuples ---


def quadratic_form_pd(u: SFunction, xs: Sequence[int], cs: Sequence[complex]) -> complex:
    """sum_ij conj(c_i) c_j u(x_i* x_j)."""
    S = u.base
    total = 0j
    for xi, ci in zip(xs, cs):
        for xj, cj in zip(xs, cs):
            total += np.conj(ci) * cj * u[S.mul(int(S.star[xi]), xj)]
    return complex(total)


def quadratic_form_rpd(u: SFunction, xs: Sequence[int], cs: Sequence[complex]) -> complex:
    """sum_ij conj(c_i) c_j (lambda_r(x_i) u)(x_j)."""
    S = u.base
    total = 0j
    for xi, ci in zip(xs, cs):
        shifted = lambda_r_apply(S, xi, u)
        for xj, cj in zip(xs, cs):
            total += np.conj(ci) * cj * shifted[xj]
    return complex(total)


def extendibility_gap(
    u: SFunction, xs: Sequence[int], cs: Sequence[complex], constant: float
) -> float:
    """constant * (restricted form) - |sum c_i u(x_i)|^2; nonnegative for extendible u."""
    linear = sum(c * u[x] for x, c in zip(xs, cs))
    return float(constant * quadratic_form_rpd(u, xs, cs).real - abs(linear) ** 2)


def _gram_for(check: str, u: SFunction) -> np.ndarray:
    if check in ("pd", "extendible_pd"):
        return gram_pd(u)
    return gram_rpd(u)


def evaluate_witness(report: CheckReport, u: SFunction) -> complex:
    """
    Re-evaluate the witness of a failed report against u. Negative real part
    (or a nonzero imaginary part for symmetry failures) confirms the failure.
    """
    if report.witness is None:
        raise ValueError(f"report {report.check} carries no witness")
    c = np.asarray(report.witness, dtype=np.complex128)
    if report.violation == "functional":
        f = SFunction(u.base, c)
        return complex(np.sum(restricted_convolve(tilde_involution(f), f).values * u.values))
    K = _gram_for(report.check, u)
    form = complex(np.vdot(c, K @ c))
    if report.violation == "range":
        linear = complex(np.sum(c * u.values))
        return form - abs(linear) ** 2
    return form


# --- factorization ---


def godement_factorize(phi: SFunction, tol: Optional[float] = None) -> GodementFactorization:
    """
    phi = xi . xi~ with xi = conj(P^(1/2) e), P = rho_r~(phi) and e the algebra
    identity (sum of delta over idempotents).
    """
    report = is_rpd(phi, tol)
    if not report.verdict:
        raise NotRPDError(report.detail or "not restricted positive definite", report)

    S = phi.base
    P = lift_rho(phi).matrix
    if float(np.max(np.abs(P - P.conj().T), initial=0.0)) > _hermitian_tolerance(P):
        raise NotRPDError("rho_r~(phi) is not Hermitian", report)
    w, V = _spectrum(P)
    if w.size and w[0] < -report.tolerance:
        raise NotRPDError(f"rho_r~(phi) has eigenvalue {w[0]:.6g}", report)
    root = (V * np.sqrt(np.clip(w, 0.0, None))) @ V.conj().T
    eta = root @ algebra_identity(S).values
    xi = SFunction(S, np.conj(eta))

    reconstruction = restricted_convolve(xi, tilde_involution(xi))
    error = float(np.max(np.abs(phi.values - reconstruction.values), initial=0.0))
    limit = FACTORIZATION_TOL.reconstruction_error * max(1.0, norm_p(phi, math.inf))
    if error > limit:
        raise ReconstructionFailedError(
            f"||phi - xi.xi~||_inf = {error:.3g} > {limit:.3g} on {S.label}", witness=xi.values
        )
    logger.debug("Factorized on %s with error %.3g", S.label, error)
    return GodementFactorization(xi=xi, reconstruction_error=error)


# --- extension by zero ---


def tau_extend(u: SFunction) -> SFunction:
    """Extension by zero to S_r (v(z0) = 0)."""
    Sr = restricted_semigroup(u.base)
    return SFunction(Sr, np.append(u.values, 0.0))


def tau_restrict(v: SFunction, base: Optional[InverseSemigroup] = None) -> SFunction:
    """Restriction from S_r back to S (drops the zero coordinate)."""
    S = base if base is not None else v.base.source
    if S is None or restricted_semigroup(S) != v.base:
        raise BaseMismatchError(f"{v.base.label} is not a restricted semigroup of the given base")
    return SFunction(S, v.values[: S.n])


def unitization_extend(v: SFunction, value: float) -> SFunction:
    """
    w on T^1 with w = v on T and w(1) = value. When T already has an identity
    v is returned unchanged and value is ignored.
    """
    T = v.base
    T1 = adjoin_identity(T)
    if T1 is T:
        return v
    return SFunction(T1, np.append(v.values, value))


# --- generators and samplers ---


def random_xi(S: InverseSemigroup, rng: np.random.Generator) -> SFunction:
    """Independent standard complex Gaussian entries."""
    values = (rng.standard_normal(S.n) + 1j * rng.standard_normal(S.n)) / np.sqrt(2.0)
    return SFunction(S, values)


def random_rpd(S: InverseSemigroup, seed: int) -> SFunction:
    """xi . xi~ for a seeded random xi, certified extendible before return."""
    xi = random_xi(S, np.random.default_rng(seed))
    phi = restricted_convolve(xi, tilde_involution(xi))
    report = is_extendible_rpd(phi)
    if not report.verdict:
        raise CertificationError(
            f"xi.xi~ on {S.label} failed extendibility: {report.detail}", witness=report.witness
        )
    return phi


def positive_functional_check(
    u: SFunction, trials: int, seed: int, tol: Optional[float] = None
) -> CheckReport:
    """
    Samples Re sum_x (f~.f)(x) u(x) >= 0 and its imaginary part ~ 0, first over
    the point masses, then over `trials` seeded random f. A necessary condition
    for u to define a positive functional on the restricted algebra.
    """
    S = u.base
    spectrum = tuple(float(v) for v in _spectrum(gram_rpd(u))[0])
    scale_u = norm_p(u, 1)
    children = np.random.SeedSequence(seed).spawn(trials)
    samples = [np.eye(S.n, dtype=np.complex128)[x] for x in range(S.n)]
    samples += [random_xi(S, np.random.default_rng(child)).values for child in children]

    worst = 0.0
    for f_values in samples:
        f = SFunction(S, f_values)
        pairing = complex(np.sum(restricted_convolve(tilde_involution(f), f).values * u.values))
        scale = max(1.0, scale_u * float(np.vdot(f_values, f_values).real))
        limit = tol if tol is not None else GRAM_TOL.psd_relative * scale
        worst = min(worst, pairing.real)
        if pairing.real < -limit or abs(pairing.imag) > limit:
            return CheckReport(
                "functional",
                False,
                limit,
                gram_spectrum=spectrum,
                witness=f_values,
                violation="functional",
                detail=f"pairing {pairing.real:.6g}{pairing.imag:+.6g}i",
            )
    used = tol if tol is not None else GRAM_TOL.psd_relative
    return CheckReport(
        "functional", True, used, gram_spectrum=spectrum, detail=f"min pairing {worst:.6g}"
    )


def chain_is_pd_oracle(u: SFunction) -> bool:
    """
    Closed form of P(S) on a chain: u real, nonnegative and u(e) <= u(f)
    whenever e <= f in the natural order (non-increasing in the max-labels).
    """
    if not u.is_real():
        return False
    values = u.values.real
    if np.any(values < 0):
        return False
    S = u.base
    for e in range(S.n):
        for f in range(S.n):
            if natural_order(S, e, f) and values[e] > values[f]:
                return False
    return True
