"""
Finite inverse semigroup as a validated multiplication table.
Build instances through services.semigroup_core.validate_table; the dataclass
itself does no checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, FrozenSet, Optional, TypeVar

import numpy as np

ElementSet = FrozenSet[int]
T = TypeVar("T")


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.int64, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class InverseSemigroup:
    """table[i, j] is the index of x_i x_j, star[i] the index of x_i*."""

    n: int
    table: np.ndarray
    star: np.ndarray
    names: tuple[str, ...] = ()
    identity: Optional[int] = None
    zero: Optional[int] = None
    name: str = ""
    # set on S_r: the semigroup it was restricted from
    source: Optional["InverseSemigroup"] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", _frozen(self.table))
        object.__setattr__(self, "star", _frozen(self.star))
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(self.n)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InverseSemigroup):
            return False
        if self is other:
            return True
        return (
            self.n == other.n
            and np.array_equal(self.table, other.table)
            and np.array_equal(self.star, other.star)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes(), self.star.tobytes()))

    def __len__(self) -> int:
        return self.n

    @property
    def label(self) -> str:
        return self.name or f"S[{self.n}]"

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def derived(self, key: str, build: Callable[[], T]) -> T:
        """Per-instance memo for objects built from this semigroup (S_r, lambda_r, ...)."""
        memo = self.__dict__.setdefault("_derived", {})
        if key not in memo:
            memo[key] = build()
        return memo[key]

    @cached_property
    def range_idempotent(self) -> np.ndarray:
        """xx* for every x."""
        idx = np.arange(self.n)
        return self.table[idx, self.star]

    @cached_property
    def domain_idempotent(self) -> np.ndarray:
        """x*x for every x."""
        idx = np.arange(self.n)
        return self.table[self.star, idx]

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        idx = np.arange(self.n)
        return self.table[idx, idx] == idx

    @cached_property
    def restricted_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """All (x, y) with x*x = yy*, i.e. the pairs where x.y is defined."""
        xs, ys = np.nonzero(self.domain_idempotent[:, None] == self.range_idempotent[None, :])
        return xs, ys

    @cached_property
    def same_range(self) -> np.ndarray:
        """Boolean n x n matrix [x_i x_i* = x_j x_j*]."""
        r = self.range_idempotent
        return r[:, None] == r[None, :]
