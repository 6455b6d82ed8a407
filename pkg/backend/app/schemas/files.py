"""Pydantic models for the JSON file formats."""

from __future__ import annotations

import math
from typing import List, Optional, Union

from pydantic import BaseModel, Field, StrictInt, root_validator, validator

ComplexEntry = Union[List[float], float]


def _check_pair(entry: ComplexEntry) -> ComplexEntry:
    if isinstance(entry, list) and len(entry) != 2:
        raise ValueError("complex entries must be [re, im]")
    parts = entry if isinstance(entry, list) else [entry]
    if not all(math.isfinite(p) for p in parts):
        raise ValueError("complex entries must be finite")
    return entry


class SemigroupFile(BaseModel):
    """{"name"?, "elements"?, "table", "star"?}; table[i][j] is the index of x_i x_j."""

    name: Optional[str] = None
    elements: Optional[List[str]] = None
    table: List[List[StrictInt]] = Field(..., description="n x n multiplication table")
    star: Optional[List[StrictInt]] = None

    @validator("table")
    def table_is_square(cls, table: List[List[int]]) -> List[List[int]]:
        n = len(table)
        if n == 0:
            raise ValueError("table is empty")
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise ValueError(f"table[{i}][{j}]={v} out of range")
        return table

    @root_validator(skip_on_failure=True)
    def lengths_match(cls, values: dict) -> dict:
        n = len(values["table"])
        elements = values.get("elements")
        if elements is not None and len(elements) != n:
            raise ValueError(f"{len(elements)} element names for {n} elements")
        star = values.get("star")
        if star is not None:
            if len(star) != n:
                raise ValueError(f"star has {len(star)} entries, expected {n}")
            if any(not 0 <= s < n for s in star):
                raise ValueError("star entry out of range")
        return values


class FunctionFile(BaseModel):
    """{"semigroup", "values"}; values are [re, im] pairs or plain reals."""

    semigroup: str = ""
    values: List[ComplexEntry]

    @validator("values")
    def entries_are_pairs(cls, values: List[ComplexEntry]) -> List[ComplexEntry]:
        return [_check_pair(v) for v in values]


class RepresentationFile(BaseModel):
    """{"semigroup", "dim", "matrices"}; matrices[x][i][j] = [re, im]."""

    semigroup: str = ""
    dim: int = Field(..., ge=1)
    matrices: List[List[List[ComplexEntry]]]

    @root_validator(skip_on_failure=True)
    def shapes_match(cls, values: dict) -> dict:
        dim = values["dim"]
        for x, matrix in enumerate(values["matrices"]):
            if len(matrix) != dim or any(len(row) != dim for row in matrix):
                raise ValueError(f"matrix {x} is not {dim}x{dim}")
            for row in matrix:
                for entry in row:
                    _check_pair(entry)
        return values


class CheckReportSchema(BaseModel):
    check: str
    verdict: bool
    spectrum: List[float] = Field(default_factory=list)
    witness: Optional[List[List[float]]] = None
    constant: Optional[float] = None
    tolerance: float
    elements: Optional[List[int]] = None
    violation: Optional[str] = None
    detail: Optional[str] = None
