"""Complex-valued functions on the element set of a semigroup."""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

import numpy as np

from app.errors import BaseMismatchError, DimensionMismatchError
from app.models.semigroup import InverseSemigroup


@dataclass(frozen=True, eq=False)
class SFunction:
    """A vector in C^S, indexed by element index."""

    base: InverseSemigroup
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.complex128, copy=True).reshape(-1)
        if values.shape[0] != self.base.n:
            raise DimensionMismatchError(
                f"function has {values.shape[0]} values, semigroup has {self.base.n} elements"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.base.n

    def __getitem__(self, x: int) -> complex:
        return complex(self.values[x])

    def same_base(self, other: "SFunction") -> None:
        if self.base is not other.base and self.base != other.base:
            raise BaseMismatchError(
                f"functions live on {self.base.label} and {other.base.label}"
            )

    def _combine(self, other: "SFunction", values: np.ndarray) -> "SFunction":
        self.same_base(other)
        return SFunction(self.base, values)

    def __add__(self, other: "SFunction") -> "SFunction":
        return self._combine(other, self.values + other.values)

    def __sub__(self, other: "SFunction") -> "SFunction":
        return self._combine(other, self.values - other.values)

    def __neg__(self) -> "SFunction":
        return SFunction(self.base, -self.values)

    def __mul__(self, scalar: Number) -> "SFunction":
        if not isinstance(scalar, Number):
            return NotImplemented
        return SFunction(self.base, self.values * scalar)

    __rmul__ = __mul__

    def allclose(self, other: "SFunction", atol: float = 0.0) -> bool:
        self.same_base(other)
        return bool(np.max(np.abs(self.values - other.values), initial=0.0) <= atol)

    def is_real(self) -> bool:
        return bool(np.all(self.values.imag == 0))
