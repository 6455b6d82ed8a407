"""
Validation of finite inverse semigroups and the restricted (groupoid) structure.

All checks here are exact integer table lookups.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence

import numpy as np

from app.errors import (
    InverseNotUniqueError,
    MalformedTableError,
    NotAssociativeError,
    NotIdempotentError,
    NotRegularError,
    StarMismatchError,
)
from app.models.semigroup import ElementSet, InverseSemigroup

logger = logging.getLogger(__name__)


def _as_table(n: int, table: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    if n < 1:
        raise MalformedTableError(f"element count must be positive, got {n}")
    rows = list(table)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise MalformedTableError(f"table must be {n}x{n}")
    arr = np.array(rows, dtype=np.int64)
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise MalformedTableError(
            f"entry table[{bad[0]}][{bad[1]}]={arr[bad[0], bad[1]]} out of range", witness=tuple(bad)
        )
    return arr


def _check_associative(table: np.ndarray) -> None:
    n = table.shape[0]
    idx = np.arange(n)
    left = table[table]  # [i, j, k] -> (ij)k
    right = table[idx[:, None, None], table[None, :, :]]  # [i, j, k] -> i(jk)
    bad = np.argwhere(left != right)
    if bad.size:
        i, j, k = (int(v) for v in bad[0])
        raise NotAssociativeError(
            f"({i}*{j})*{k}={left[i, j, k]} but {i}*({j}*{k})={right[i, j, k]}",
            witness=(i, j, k),
        )


def _derive_star(table: np.ndarray) -> np.ndarray:
    """For each x the unique s with xsx = x and sxs = s."""
    n = table.shape[0]
    idx = np.arange(n)
    star = np.empty(n, dtype=np.int64)
    for x in range(n):
        xsx = table[table[x, :], x]
        sxs = table[table[:, x], idx]
        candidates = np.nonzero((xsx == x) & (sxs == idx))[0]
        if candidates.size == 0:
            raise NotRegularError(f"element {x}", witness=(x,))
        if candidates.size > 1:
            raise InverseNotUniqueError(
                f"element {x} has inverses {candidates.tolist()}",
                witness=(x, *candidates.tolist()),
            )
        star[x] = candidates[0]
    return star


def _check_star(table: np.ndarray, star: np.ndarray, derived: np.ndarray) -> None:
    n = table.shape[0]
    idx = np.arange(n)
    if star.shape != (n,) or star.min() < 0 or star.max() >= n:
        raise StarMismatchError("star must list one element index per element")
    mismatch = np.nonzero(star != derived)[0]
    if mismatch.size:
        x = int(mismatch[0])
        raise StarMismatchError(
            f"supplied star[{x}]={star[x]} but the unique inverse is {derived[x]}",
            witness=(x,),
        )
    if not np.array_equal(star[star], idx):
        raise StarMismatchError("star is not an involution")
    # (xy)* = y* x*
    lhs = star[table]
    rhs = table[star[None, :], star[:, None]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise StarMismatchError(f"({i}*{j})* != {j}* {i}*", witness=(i, j))


def _find_identity(table: np.ndarray) -> Optional[int]:
    idx = np.arange(table.shape[0])
    for e in range(table.shape[0]):
        if np.array_equal(table[e, :], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def _find_zero(table: np.ndarray) -> Optional[int]:
    for z in range(table.shape[0]):
        if np.all(table[z, :] == z) and np.all(table[:, z] == z):
            return z
    return None


def validate_table(
    n: int,
    table: Sequence[Sequence[int]] | np.ndarray,
    star: Optional[Sequence[int] | np.ndarray] = None,
    names: Optional[Sequence[str]] = None,
    name: str = "",
    source: Optional[InverseSemigroup] = None,
) -> InverseSemigroup:
    """
    Check associativity and unique inverses, derive or verify the involution,
    detect identity and zero. Raises a SemigroupValidationError subclass.
    """
    arr = _as_table(n, table)
    _check_associative(arr)
    derived = _derive_star(arr)
    if star is not None:
        supplied = np.asarray(list(star), dtype=np.int64)
        _check_star(arr, supplied, derived)
    else:
        _check_star(arr, derived, derived)
    if names is not None and len(names) != n:
        raise MalformedTableError(f"{len(names)} names for {n} elements")

    semigroup = InverseSemigroup(
        n=n,
        table=arr,
        star=derived,
        names=tuple(names) if names else (),
        identity=_find_identity(arr),
        zero=_find_zero(arr),
        name=name,
        source=source,
    )
    logger.debug(
        "Validated %s: n=%d identity=%s zero=%s",
        semigroup.label,
        n,
        semigroup.identity,
        semigroup.zero,
    )
    return semigroup


def idempotents(S: InverseSemigroup) -> ElementSet:
    """E(S) = {e : ee = e}; every ss* must belong to it."""
    E = frozenset(int(e) for e in np.nonzero(S.idempotent_mask)[0])
    missing = set(int(r) for r in S.range_idempotent) - E
    if missing:
        raise StarMismatchError(f"ss* not idempotent for {sorted(missing)}")
    return E


def natural_order(S: InverseSemigroup, e: int, f: int) -> bool:
    """e <= f iff ef = e, for idempotents e, f."""
    for v in (e, f):
        if not S.idempotent_mask[v]:
            raise NotIdempotentError(f"element {v} is not idempotent", witness=(v,))
    return S.mul(e, f) == e


def restricted_product(S: InverseSemigroup, x: int, y: int) -> Optional[int]:
    """xy when x*x = yy*, undefined (None) otherwise."""
    if S.domain_idempotent[x] == S.range_idempotent[y]:
        return S.mul(x, y)
    return None


def star_set(S: InverseSemigroup, F: Iterable[int]) -> ElementSet:
    return frozenset(int(S.star[x]) for x in F)


def restricted_set_product(S: InverseSemigroup, F: Iterable[int], G: Iterable[int]) -> ElementSet:
    """F.G = {st : s in F, t in G, s*s = tt*}."""
    G = list(G)
    out = set()
    for s in F:
        for t in G:
            p = restricted_product(S, s, t)
            if p is not None:
                out.add(p)
    return frozenset(out)


def restricted_semigroup(S: InverseSemigroup) -> InverseSemigroup:
    """
    S_r: the associated groupoid with a fresh absorbing zero z0 = n adjoined,
    z0* = z0 and x.y = xy if x*x = yy*, z0 otherwise. Always adjoins, even when
    S has a zero of its own.
    """
    return S.derived("restricted", lambda: _build_restricted(S))


def _build_restricted(S: InverseSemigroup) -> InverseSemigroup:
    n = S.n
    z0 = n
    table = np.full((n + 1, n + 1), z0, dtype=np.int64)
    xs, ys = S.restricted_pairs
    table[xs, ys] = S.table[xs, ys]
    star = np.append(S.star, z0)
    names = S.names + ("0_r",)
    try:
        Sr = validate_table(
            n + 1,
            table,
            star=star,
            names=names,
            name=f"{S.label}_r",
            source=S,
        )
    except Exception as e:
        raise RuntimeError(f"restricted semigroup of {S.label} failed validation: {e}") from e
    if Sr.zero != z0:
        raise RuntimeError(f"restricted semigroup of {S.label} has zero {Sr.zero}, expected {z0}")
    return Sr


def is_group(S: InverseSemigroup) -> bool:
    return S.identity is not None and bool(np.all(S.range_idempotent == S.identity))


def is_semilattice(S: InverseSemigroup) -> bool:
    return bool(np.all(S.idempotent_mask)) and bool(np.array_equal(S.table, S.table.T))


def is_chain(S: InverseSemigroup) -> bool:
    """Semilattice whose natural order is total."""
    if not is_semilattice(S):
        return False
    t = S.table
    idx = np.arange(S.n)
    comparable = (t == idx[:, None]) | (t == idx[None, :])
    return bool(np.all(comparable))


def has_zero(S: InverseSemigroup) -> bool:
    return S.zero is not None


def commuting_idempotents(S: InverseSemigroup) -> bool:
    """Idempotents commute and E is closed under products."""
    E = np.array(sorted(idempotents(S)), dtype=np.int64)
    block = S.table[np.ix_(E, E)]
    return bool(np.array_equal(block, block.T)) and bool(np.all(S.idempotent_mask[block]))
