"""
Builtin corpus names: chainK, ZK, SK, IK and products AxB (e.g. Z3xchain2).
"""

from __future__ import annotations

import logging
import re
from typing import Callable, Sequence

from app.adapters.base_adapter import CorpusSource
from app.errors import BadParamsError
from app.models.semigroup import InverseSemigroup
from app.services.constructors import (
    chain_semilattice,
    cyclic_group,
    direct_product,
    symmetric_group,
    symmetric_inverse_monoid,
)

logger = logging.getLogger(__name__)

DEFAULT_CORPUS: tuple[str, ...] = (
    "chain2",
    "chain3",
    "chain4",
    "chain5",
    "chain6",
    "Z2",
    "Z6",
    "S3",
    "Z3xchain2",
    "Z2xchain3",
    "I2",
    "I3",
)

_FACTORIES: dict[str, Callable[[int], InverseSemigroup]] = {
    "chain": chain_semilattice,
    "Z": cyclic_group,
    "S": symmetric_group,
    "I": symmetric_inverse_monoid,
}

_NAME_RE = re.compile(r"^(chain|Z|S|I)(\d+)$")


def _factor(name: str) -> InverseSemigroup:
    m = _NAME_RE.match(name.strip())
    if not m:
        raise BadParamsError(f"unknown builtin semigroup {name!r}")
    return _FACTORIES[m.group(1)](int(m.group(2)))


def resolve_builtin(name: str) -> InverseSemigroup:
    """'Z3xchain2' -> direct_product(Z3, chain2); factors fold left to right."""
    parts = [p for p in name.split("x")]
    if not parts or any(not p for p in parts):
        raise BadParamsError(f"malformed product name {name!r}")
    S = _factor(parts[0])
    for part in parts[1:]:
        S = direct_product(S, _factor(part))
    return S


def is_builtin_name(name: str) -> bool:
    return all(_NAME_RE.match(p) for p in name.split("x"))


class BuiltinSource(CorpusSource):
    kind = "builtin"

    def __init__(self, names: Sequence[str] = DEFAULT_CORPUS) -> None:
        self.names = list(names)

    def keys(self) -> list[str]:
        return self.names

    def _normalize(self, key: str) -> InverseSemigroup:
        return resolve_builtin(key)
