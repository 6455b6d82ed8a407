"""
Generators for the test corpus: chains, cyclic and symmetric groups, direct
products, symmetric inverse monoids, adjoined identities.
"""

from __future__ import annotations

import itertools
import logging
from typing import Optional, Sequence

import numpy as np

from app.config import SIZE_LIMITS
from app.errors import BadParamsError, SizeLimitError
from app.models.semigroup import InverseSemigroup
from app.services.semigroup_core import is_group, validate_table

logger = logging.getLogger(__name__)


def _require_positive(k: int, what: str) -> None:
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise BadParamsError(f"{what} needs a positive integer, got {k!r}")


def chain_semilattice(k: int) -> InverseSemigroup:
    """{0..k-1} under xy = max(x, y), x* = x. 0 is the identity, k-1 the zero."""
    _require_positive(k, "chain")
    idx = np.arange(k)
    table = np.maximum(idx[:, None], idx[None, :])
    return validate_table(k, table, star=idx, name=f"chain{k}")


def cyclic_group(k: int) -> InverseSemigroup:
    _require_positive(k, "cyclic group")
    idx = np.arange(k)
    table = (idx[:, None] + idx[None, :]) % k
    return validate_table(k, table, star=(-idx) % k, name=f"Z{k}")


def group_from_table(
    table: Sequence[Sequence[int]],
    names: Optional[Sequence[str]] = None,
    name: str = "",
) -> InverseSemigroup:
    """Validate a Cayley table and insist that it is a group."""
    S = validate_table(len(table), table, names=names, name=name)
    if not is_group(S):
        raise BadParamsError(f"{S.label} is an inverse semigroup but not a group")
    return S


def _compose(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    """(xy)(i) = x(y(i)); -1 marks an undefined point."""
    return tuple(-1 if y[i] < 0 else x[y[i]] for i in range(len(y)))


def _partial_inverse(x: tuple[int, ...]) -> tuple[int, ...]:
    inv = [-1] * len(x)
    for i, v in enumerate(x):
        if v >= 0:
            inv[v] = i
    return tuple(inv)


def _from_maps(maps: list[tuple[int, ...]], name: str) -> InverseSemigroup:
    index = {m: i for i, m in enumerate(maps)}
    n = len(maps)
    table = [[index[_compose(x, y)] for y in maps] for x in maps]
    star = [index[_partial_inverse(x)] for x in maps]
    names = [
        "[" + ",".join("_" if v < 0 else str(v) for v in m) + "]" for m in maps
    ]
    return validate_table(n, table, star=star, names=names, name=name)


def symmetric_group(k: int) -> InverseSemigroup:
    _require_positive(k, "symmetric group")
    if k > SIZE_LIMITS.max_symmetric_group_degree:
        raise SizeLimitError(
            f"symmetric group degree {k} > {SIZE_LIMITS.max_symmetric_group_degree}"
        )
    maps = list(itertools.permutations(range(k)))
    return _from_maps(maps, f"S{k}")


def symmetric_inverse_monoid(k: int) -> InverseSemigroup:
    """All partial bijections of {0..k-1}; |I_k| = sum_j C(k, j)^2 j!."""
    _require_positive(k, "symmetric inverse monoid")
    if k > SIZE_LIMITS.max_inverse_monoid_degree:
        raise SizeLimitError(
            f"symmetric inverse monoid degree {k} > {SIZE_LIMITS.max_inverse_monoid_degree}"
        )
    maps = []
    for m in itertools.product(range(-1, k), repeat=k):
        defined = [v for v in m if v >= 0]
        if len(defined) == len(set(defined)):
            maps.append(m)
    logger.debug("I_%d has %d partial bijections", k, len(maps))
    return _from_maps(maps, f"I{k}")


def direct_product(S: InverseSemigroup, T: InverseSemigroup) -> InverseSemigroup:
    """Componentwise product; element (i, j) has index i * T.n + j."""
    n = S.n * T.n
    i = np.repeat(np.arange(S.n), T.n)
    j = np.tile(np.arange(T.n), S.n)
    table = S.table[i[:, None], i[None, :]] * T.n + T.table[j[:, None], j[None, :]]
    star = S.star[i] * T.n + T.star[j]
    names = [f"({S.names[a]},{T.names[b]})" for a, b in zip(i, j)]
    return validate_table(n, table, star=star, names=names, name=f"{S.label}x{T.label}")


def adjoin_identity(T: InverseSemigroup) -> InverseSemigroup:
    """T^1: T itself if it has an identity, otherwise T with a new 1, 1* = 1."""
    if T.identity is not None:
        return T
    n = T.n
    one = n
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = T.table
    table[one, :] = np.arange(n + 1)
    table[:, one] = np.arange(n + 1)
    star = np.append(T.star, one)
    return validate_table(
        n + 1, table, star=star, names=T.names + ("1",), name=f"{T.label}^1"
    )
