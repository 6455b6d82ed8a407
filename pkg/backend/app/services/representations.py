"""
Restricted regular representations, their lifts to C^S, and validators for
*-representations and restricted representations.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from app.config import REPRESENTATION_TOL
from app.errors import (
    BaseMismatchError,
    DimensionMismatchError,
    NotRestrictedError,
    ZeroNotKilledError,
)
from app.models.function import SFunction
from app.models.operator import LinearOperator, Representation
from app.models.report import CheckReport
from app.models.semigroup import InverseSemigroup
from app.services.semigroup_core import restricted_semigroup

logger = logging.getLogger(__name__)


def lambda_r(S: InverseSemigroup) -> Representation:
    """lambda_r(s) delta_y = delta_{sy} if s*s = yy*, else 0."""
    return S.derived("lambda_r", lambda: _build_lambda_r(S))


def _build_lambda_r(S: InverseSemigroup) -> Representation:
    n = S.n
    mats = np.zeros((n, n, n), dtype=np.complex128)
    ss, ys = S.restricted_pairs
    mats[ss, S.table[ss, ys], ys] = 1.0
    return Representation(S, mats, name="lambda_r")


def rho_r(S: InverseSemigroup) -> Representation:
    """(rho_r(u) xi)(x) = xi(xu) if uu* = x*x, else 0."""
    return S.derived("rho_r", lambda: _build_rho_r(S))


def _build_rho_r(S: InverseSemigroup) -> Representation:
    n = S.n
    mats = np.zeros((n, n, n), dtype=np.complex128)
    xs, us = S.restricted_pairs
    mats[us, xs, S.table[xs, us]] = 1.0
    return Representation(S, mats, name="rho_r")


def trivial_representation(S: InverseSemigroup, dim: int = 1) -> Representation:
    mats = np.broadcast_to(np.eye(dim, dtype=np.complex128), (S.n, dim, dim))
    return Representation(S, mats, name="trivial")


def lambda_r_apply(S: InverseSemigroup, s: int, f: SFunction) -> SFunction:
    """Functional form: (lambda_r(s) f)(x) = f(s*x) [ss* = xx*]."""
    values = f.values[S.table[S.star[s], :]] * (S.range_idempotent == S.range_idempotent[s])
    return SFunction(S, values)


def rho_r_apply(S: InverseSemigroup, u: int, f: SFunction) -> SFunction:
    """Functional form: (rho_r(u) f)(x) = f(xu) [uu* = x*x]."""
    values = f.values[S.table[:, u]] * (S.domain_idempotent == S.range_idempotent[u])
    return SFunction(S, values)


def _lift(rep: Representation, f: SFunction) -> LinearOperator:
    if f.base is not rep.base and f.base != rep.base:
        raise BaseMismatchError(f"function on {f.base.label}, representation on {rep.base.label}")
    return LinearOperator(rep.base, np.tensordot(f.values, rep.matrices, axes=1))


def lift_lambda(f: SFunction) -> LinearOperator:
    """lambda_r~(f) = sum_y f(y) lambda_r(y)."""
    return _lift(lambda_r(f.base), f)


def lift_rho(phi: SFunction) -> LinearOperator:
    """rho_r~(phi) = sum_z phi(z) rho_r(z)."""
    return _lift(rho_r(phi.base), phi)


def lift(rep: Representation, f: SFunction) -> LinearOperator:
    """sum_x f(x) pi(x) for an arbitrary representation."""
    return _lift(rep, f)


def _norm_violation(rep: Representation) -> Optional[tuple[int, float]]:
    norms = np.linalg.norm(rep.matrices, ord=2, axis=(1, 2))
    limit = 1.0 + REPRESENTATION_TOL.norm_relative * np.maximum(1.0, norms)
    bad = np.nonzero(norms > limit)[0]
    if bad.size:
        x = int(bad[0])
        return x, float(norms[x])
    return None


def _residual(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b), initial=0.0))


def _law_failure(check: str, tol: float, elements: tuple[int, ...], detail: str) -> CheckReport:
    return CheckReport(check, False, tol, elements=elements, violation="law", detail=detail)


def _check_laws(rep: Representation, restricted: bool, check: str) -> CheckReport:
    S = rep.base
    tol = REPRESENTATION_TOL.law_residual
    mats = rep.matrices
    adjoints = np.conj(np.transpose(mats, (0, 2, 1)))

    for x in range(S.n):
        if _residual(mats[S.star[x]], adjoints[x]) > tol:
            return _law_failure(check, tol, (x,), f"pi({x}*) != pi({x})*")
        if _residual(mats[x] @ adjoints[x] @ mats[x], mats[x]) > tol:
            return _law_failure(check, tol, (x,), f"pi({x}) is not a partial isometry")

    zero = np.zeros((rep.dim, rep.dim))
    for x in range(S.n):
        products = np.matmul(mats[x][None, :, :], mats)
        for y in range(S.n):
            defined = S.domain_idempotent[x] == S.range_idempotent[y]
            expected = mats[S.table[x, y]] if (defined or not restricted) else zero
            if _residual(products[y], expected) > tol:
                law = "pi(x)pi(y) = pi(xy)" if (defined or not restricted) else "pi(x)pi(y) = 0"
                return _law_failure(
                    check, tol, (x, y, int(S.table[x, y])), f"{law} fails at x={x}, y={y}"
                )

    bad_norm = _norm_violation(rep)
    if bad_norm is not None:
        x, value = bad_norm
        return _law_failure(check, tol, (x,), f"||pi({x})|| = {value:.6g} > 1")
    return CheckReport(check, True, tol)


def is_star_representation(rep: Representation) -> CheckReport:
    """pi(xy) = pi(x)pi(y), pi(x*) = pi(x)*, partial isometries, ||pi|| <= 1."""
    return _check_laws(rep, restricted=False, check="star_representation")


def is_restricted_representation(rep: Representation) -> CheckReport:
    """pi(x)pi(y) = pi(xy) if x*x = yy*, 0 otherwise; pi(x*) = pi(x)*; ||pi|| <= 1."""
    return _check_laws(rep, restricted=True, check="restricted_representation")


def extend_to_Sr(rep: Representation) -> Representation:
    """pi on S -> pi on S_r with pi(z0) = 0."""
    report = is_restricted_representation(rep)
    if not report.verdict:
        raise NotRestrictedError(report.detail, witness=report.elements)
    Sr = restricted_semigroup(rep.base)
    zero = np.zeros((1, rep.dim, rep.dim), dtype=np.complex128)
    return Representation(Sr, np.concatenate([rep.matrices, zero]), name=f"{rep.name}_0")


def restrict_from_Sr(rep0: Representation, base: Optional[InverseSemigroup] = None) -> Representation:
    """pi0 on S_r killing the zero -> pi on S."""
    Sr = rep0.base
    S = base if base is not None else Sr.source
    if S is None:
        raise NotRestrictedError(f"{Sr.label} is not marked as a restricted semigroup; pass base")
    if restricted_semigroup(S) != Sr:
        raise NotRestrictedError(f"{Sr.label} is not the restricted semigroup of {S.label}")
    z0 = Sr.zero
    if np.max(np.abs(rep0.matrices[z0]), initial=0.0) != 0.0:
        raise ZeroNotKilledError(f"pi({z0}) != 0", witness=(z0,))
    return Representation(S, rep0.matrices[:z0], name=rep0.name.removesuffix("_0"))


def coefficient_function(rep: Representation, xi: np.ndarray) -> SFunction:
    """u(x) = <pi(x) xi, xi>."""
    xi = np.asarray(xi, dtype=np.complex128).reshape(-1)
    if xi.shape[0] != rep.dim:
        raise DimensionMismatchError(f"vector of length {xi.shape[0]} for dim {rep.dim}")
    values = np.einsum("i,xij,j->x", np.conj(xi), rep.matrices, xi)
    return SFunction(rep.base, values)
