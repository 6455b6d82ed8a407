"""Matrices indexed by elements, and element-wise families of them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from app.errors import DimensionMismatchError
from app.models.semigroup import InverseSemigroup


def _frozen_complex(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.complex128, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """A dim x dim complex matrix; on l2(S) dim equals base.n."""

    base: InverseSemigroup
    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = _frozen_complex(self.matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f"operator must be square, got {matrix.shape}")
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.base, self.matrix @ other.matrix)

    def commutator(self, other: "LinearOperator") -> np.ndarray:
        return self.matrix @ other.matrix - other.matrix @ self.matrix

    def inner(self, x: int, y: int) -> complex:
        """<T delta_x, delta_y> = T[y, x]."""
        return complex(self.matrix[y, x])


@dataclass(frozen=True, eq=False)
class Representation:
    """pi(x) for every element x, all acting on C^dim. matrices has shape (n, dim, dim)."""

    base: InverseSemigroup
    matrices: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        matrices = _frozen_complex(self.matrices)
        if matrices.ndim != 3 or matrices.shape[1] != matrices.shape[2]:
            raise DimensionMismatchError(f"expected (n, dim, dim) matrices, got {matrices.shape}")
        if matrices.shape[0] != self.base.n:
            raise DimensionMismatchError(
                f"{matrices.shape[0]} matrices for {self.base.n} elements"
            )
        object.__setattr__(self, "matrices", matrices)

    @property
    def dim(self) -> int:
        return self.matrices.shape[1]

    def __getitem__(self, x: int) -> np.ndarray:
        return self.matrices[x]

    def operator(self, x: int) -> LinearOperator:
        return LinearOperator(self.base, self.matrices[x])
