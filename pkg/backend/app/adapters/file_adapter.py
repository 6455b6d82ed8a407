"""
JSON file ingestion: semigroup, function and representation files, plus the
corpus source that reads a file or a directory of semigroup files.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Optional, Sequence, Type, TypeVar, Union

import numpy as np
from pydantic import BaseModel, ValidationError

from app.adapters.base_adapter import CorpusSource
from app.config import settings
from app.errors import BaseMismatchError, DimensionMismatchError, ParseError
from app.models.function import SFunction
from app.models.operator import Representation
from app.models.report import complex_pairs
from app.models.semigroup import InverseSemigroup
from app.schemas.files import (
    ComplexEntry,
    FunctionFile,
    RepresentationFile,
    SemigroupFile,
)
from app.services.semigroup_core import validate_table

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
M = TypeVar("M", bound=BaseModel)


def read_json(path: PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from e


def dump_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_json(payload: Any, path: PathLike) -> None:
    Path(path).write_text(dump_json(payload), encoding="utf-8")


def _parse(model: Type[M], payload: Any, path: PathLike) -> M:
    try:
        return model.parse_obj(payload)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ParseError(f"{path}: {where}: {first['msg']}") from e


def _complex(entry: ComplexEntry) -> complex:
    if isinstance(entry, list):
        return complex(entry[0], entry[1])
    return complex(entry)


# --- semigroups ---


def semigroup_from_file(payload: SemigroupFile, default_name: str = "") -> InverseSemigroup:
    n = len(payload.table)
    return validate_table(
        n,
        payload.table,
        star=payload.star,
        names=payload.elements,
        name=payload.name or default_name,
    )


def read_semigroup_file(path: PathLike) -> InverseSemigroup:
    payload = _parse(SemigroupFile, read_json(path), path)
    return semigroup_from_file(payload, default_name=Path(path).stem)


def semigroup_to_file(S: InverseSemigroup) -> dict[str, Any]:
    return SemigroupFile(
        name=S.label,
        elements=list(S.names),
        table=S.table.tolist(),
        star=S.star.tolist(),
    ).dict()


# --- functions ---


def _check_semigroup_name(declared: str, S: InverseSemigroup, path: PathLike) -> None:
    if declared and declared != S.label:
        raise BaseMismatchError(f"{path} is defined on {declared}, expected {S.label}")


def read_function_file(path: PathLike, S: InverseSemigroup) -> SFunction:
    payload = _parse(FunctionFile, read_json(path), path)
    _check_semigroup_name(payload.semigroup, S, path)
    if len(payload.values) != S.n:
        raise DimensionMismatchError(
            f"{path} has {len(payload.values)} values, {S.label} has {S.n} elements"
        )
    return SFunction(S, np.array([_complex(v) for v in payload.values]))


def function_to_file(f: SFunction) -> dict[str, Any]:
    return FunctionFile(semigroup=f.base.label, values=complex_pairs(f.values)).dict()


# --- representations ---


def read_representation_file(path: PathLike, S: InverseSemigroup) -> Representation:
    payload = _parse(RepresentationFile, read_json(path), path)
    _check_semigroup_name(payload.semigroup, S, path)
    if len(payload.matrices) != S.n:
        raise DimensionMismatchError(
            f"{path} has {len(payload.matrices)} matrices, {S.label} has {S.n} elements"
        )
    mats = np.array(
        [[[_complex(e) for e in row] for row in matrix] for matrix in payload.matrices],
        dtype=np.complex128,
    )
    return Representation(S, mats.reshape(S.n, payload.dim, payload.dim), name=Path(path).stem)


def representation_to_file(rep: Representation) -> dict[str, Any]:
    matrices = [[complex_pairs(row) for row in matrix] for matrix in rep.matrices]
    return RepresentationFile(semigroup=rep.base.label, dim=rep.dim, matrices=matrices).dict()


class FileSource(CorpusSource):
    """Semigroup files; directories contribute their *.json files in name order."""

    kind = "file"

    def __init__(self, paths: Optional[Sequence[PathLike]] = None) -> None:
        if not paths:
            paths = [settings.corpus_dir] if settings.corpus_dir else []
        self.paths = [Path(p) for p in paths]

    def keys(self) -> list[str]:
        out: list[str] = []
        for path in self.paths:
            if path.is_dir():
                found = sorted(path.glob("*.json"))
                logger.info("[file] %s: %d semigroup files", path, len(found))
                out.extend(str(p) for p in found)
            else:
                out.append(str(path))
        return out

    def _normalize(self, key: str) -> InverseSemigroup:
        return read_semigroup_file(key)
