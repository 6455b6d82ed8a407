"""
l^p structure on C^S, the semigroup convolution *, the restricted convolution .
and the two involutions.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable, Sequence

import numpy as np

from app.errors import BadParamsError
from app.models.function import SFunction
from app.models.semigroup import ElementSet, InverseSemigroup
from app.services.semigroup_core import idempotents

logger = logging.getLogger(__name__)


def from_values(S: InverseSemigroup, values: Sequence[complex] | np.ndarray) -> SFunction:
    return SFunction(S, np.asarray(values, dtype=np.complex128))


def zeros(S: InverseSemigroup) -> SFunction:
    return SFunction(S, np.zeros(S.n, dtype=np.complex128))


def delta(S: InverseSemigroup, x: int) -> SFunction:
    values = np.zeros(S.n, dtype=np.complex128)
    values[x] = 1.0
    return SFunction(S, values)


def indicator(S: InverseSemigroup, F: Iterable[int]) -> SFunction:
    values = np.zeros(S.n, dtype=np.complex128)
    values[list(F)] = 1.0
    return SFunction(S, values)


def conjugate(f: SFunction) -> SFunction:
    return SFunction(f.base, np.conj(f.values))


def convolve(f: SFunction, g: SFunction) -> SFunction:
    """(f*g)(x) = sum over st = x of f(s) g(t)."""
    f.same_base(g)
    S = f.base
    out = np.zeros(S.n, dtype=np.complex128)
    np.add.at(out, S.table.ravel(), np.outer(f.values, g.values).ravel())
    return SFunction(S, out)


def restricted_convolve(f: SFunction, g: SFunction) -> SFunction:
    """(f.g)(x) = sum over y with x*x = yy* of f(xy) g(y*)."""
    f.same_base(g)
    S = f.base
    xs, ys = S.restricted_pairs
    terms = f.values[S.table[xs, ys]] * g.values[S.star[ys]]
    out = np.zeros(S.n, dtype=np.complex128)
    np.add.at(out, xs, terms)
    return SFunction(S, out)


def check_involution(f: SFunction) -> SFunction:
    """f-check(x) = f(x*)."""
    return SFunction(f.base, f.values[f.base.star])


def tilde_involution(f: SFunction) -> SFunction:
    """f-tilde(x) = conj f(x*)."""
    return SFunction(f.base, np.conj(f.values[f.base.star]))


def norm_p(f: SFunction, p: float | str) -> float:
    """p in {1, 2, inf}."""
    a = np.abs(f.values)
    if p in (math.inf, "inf", "infinity"):
        return float(a.max(initial=0.0))
    if p == 1:
        return float(a.sum())
    if p == 2:
        return float(math.sqrt(float(np.sum(a * a))))
    raise BadParamsError(f"unsupported p={p!r}; use 1, 2 or inf")


def inner_product(f: SFunction, g: SFunction) -> complex:
    """<f, g> = sum f(x) conj g(x)."""
    f.same_base(g)
    return complex(np.vdot(g.values, f.values))


def support(f: SFunction, tol: float = 0.0) -> ElementSet:
    return frozenset(int(x) for x in np.nonzero(np.abs(f.values) > tol)[0])


def algebra_identity(S: InverseSemigroup) -> SFunction:
    """Sum of delta_e over idempotents: the unit of (C^S, .)."""
    return indicator(S, idempotents(S))


def polarization_rhs(f: SFunction, g: SFunction) -> SFunction:
    """(f+g).(f+g)~ - (f-g).(f-g)~ + i(f+ig).(f+ig)~ - i(f-ig).(f-ig)~ ; equals 4 f.g~."""
    f.same_base(g)

    def square(h: SFunction) -> SFunction:
        return restricted_convolve(h, tilde_involution(h))

    return (
        square(f + g)
        - square(f - g)
        + 1j * square(f + 1j * g)
        - 1j * square(f - 1j * g)
    )
