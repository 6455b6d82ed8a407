"""
Base adapter for semigroup corpus sources.
Every source turns some raw description (a builtin name, a JSON file) into a
validated InverseSemigroup. A bad entry becomes an error entry; it never
aborts the rest of the corpus.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from app.errors import AlgebraError
from app.models.semigroup import InverseSemigroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    """One corpus slot: either a semigroup or the reason it was rejected."""

    key: str
    semigroup: Optional[InverseSemigroup] = None
    error: Optional[AlgebraError] = None

    @property
    def ok(self) -> bool:
        return self.semigroup is not None

    @property
    def label(self) -> str:
        return self.semigroup.label if self.semigroup is not None else self.key


class CorpusSource(ABC):
    """Abstract base class for corpus sources."""

    kind: str = ""

    @abstractmethod
    def keys(self) -> list[str]:
        """Raw identifiers this source will resolve."""

    @abstractmethod
    def _normalize(self, key: str) -> InverseSemigroup:
        """Build the semigroup for one key; raise AlgebraError on bad input."""

    def _safe_load(self, key: str) -> CorpusEntry:
        try:
            S = self._normalize(key)
        except AlgebraError as e:
            logger.warning("[%s] rejected %s: %s", self.kind, key, e.describe())
            return CorpusEntry(key, error=e)
        logger.debug("[%s] loaded %s (n=%d)", self.kind, S.label, S.n)
        return CorpusEntry(key, semigroup=S)

    def load(self) -> list[CorpusEntry]:
        return [self._safe_load(key) for key in self.keys()]


def load_all(sources: Iterable[CorpusSource]) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    for source in sources:
        entries.extend(source.load())
    return entries


def describe_entry(entry: CorpusEntry) -> dict[str, Any]:
    if entry.ok:
        return {"semigroup": entry.label, "n": entry.semigroup.n}
    return {"semigroup": entry.key, "error": entry.error.describe()}
