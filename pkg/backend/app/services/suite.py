"""
Suite runner: every registered property against every corpus semigroup.
Load corpus -> per entry, per property: derive seed -> run -> collect.
A failing or crashing property is counted and logged; the run keeps going.
"""

from __future__ import annotations

import hashlib
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from app.adapters.base_adapter import CorpusEntry, CorpusSource, load_all
from app.adapters.builtin_adapter import DEFAULT_CORPUS, BuiltinSource, is_builtin_name
from app.adapters.file_adapter import FileSource
from app.config import SUITE_DEFAULTS
from app.errors import BadParamsError
from app.models.report import complex_pairs
from app.models.semigroup import InverseSemigroup
from app.services.properties import INVARIANTS, REGISTRY, Outcome, Property, Trial

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "text")


@dataclass(frozen=True)
class SuiteConfig:
    """Corpus entries are builtin names (chain4, Z3xchain2) or semigroup file paths."""

    corpus: tuple[str, ...] = DEFAULT_CORPUS
    trials: int = SUITE_DEFAULTS.trials
    seed: int = SUITE_DEFAULTS.seed
    tolerance: Optional[float] = None
    output_format: str = "json"
    output_path: Optional[str] = None
    properties: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise BadParamsError(f"trials must be >= 1, got {self.trials}")
        if self.output_format not in OUTPUT_FORMATS:
            raise BadParamsError(f"unknown output format {self.output_format!r}")
        if self.tolerance is not None and self.tolerance <= 0:
            raise BadParamsError(f"tolerance must be positive, got {self.tolerance}")
        unknown = [p for p in self.properties if p not in REGISTRY]
        if unknown:
            raise BadParamsError(f"unknown properties: {', '.join(unknown)}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "corpus": list(self.corpus),
            "trials": self.trials,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "properties": list(self.properties),
        }


def derive_seed(master: int, semigroup: str, pid: str) -> int:
    """Per-(semigroup, property) seed; independent of run order."""
    digest = hashlib.sha256(f"{master}:{semigroup}:{pid}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def uncovered_invariants() -> list[str]:
    """Declared invariant ids without a registered property."""
    return sorted(pid for ids in INVARIANTS.values() for pid in ids if pid not in REGISTRY)


def corpus_sources(corpus: Sequence[str]) -> list[CorpusSource]:
    names = [c for c in corpus if is_builtin_name(c)]
    paths = [c for c in corpus if not is_builtin_name(c)]
    sources: list[CorpusSource] = []
    if names:
        sources.append(BuiltinSource(names))
    if paths:
        sources.append(FileSource(paths))
    return sources


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return complex_pairs(obj.reshape(-1))
        return obj.tolist()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, np.generic):
        return to_jsonable(obj.item())
    return obj


def _selected(config: SuiteConfig) -> list[Property]:
    if config.properties:
        return [REGISTRY[p] for p in config.properties]
    return list(REGISTRY.values())


def _run_property(
    prop: Property, S: InverseSemigroup, config: SuiteConfig, stats: dict[str, int]
) -> dict[str, Any]:
    result: dict[str, Any] = {"anchor": prop.anchor}
    if not prop.applies(S):
        stats["properties_skipped"] += 1
        result.update(skipped=True, passed=True, trials=0, max_residual=0.0)
        return result

    rng = np.random.default_rng(derive_seed(config.seed, S.label, prop.pid))
    start = time.monotonic()
    try:
        outcome = prop.fn(S, Trial(rng, config.trials, config.tolerance))
    except Exception as e:
        logger.exception("Property %s crashed on %s: %s", prop.pid, S.label, e)
        stats["errors"] += 1
        describe = getattr(e, "describe", None)
        message = describe() if callable(describe) else f"{type(e).__name__}: {e}"
        outcome = Outcome(False, 0, witness={"error": message})
    elapsed = time.monotonic() - start
    logger.debug("%s on %s: passed=%s in %.2fs", prop.pid, S.label, outcome.passed, elapsed)

    stats["properties_run"] += 1
    if not outcome.passed:
        stats["properties_failed"] += 1
        logger.warning("%s failed on %s", prop.pid, S.label)
    result.update(
        skipped=False,
        passed=outcome.passed,
        trials=outcome.trials,
        max_residual=float(outcome.max_residual),
    )
    if not outcome.passed:
        result["witness"] = to_jsonable(outcome.witness)
    return result


def _run_entry(
    entry: CorpusEntry, config: SuiteConfig, stats: dict[str, int]
) -> dict[str, Any]:
    if not entry.ok:
        stats["invalid_entries"] += 1
        return {"status": "invalid", "error": entry.error.describe()}

    S = entry.semigroup
    start = time.monotonic()
    properties = {p.pid: _run_property(p, S, config, stats) for p in _selected(config)}
    passed = all(r["passed"] for r in properties.values())
    logger.info(
        "Suite entry %s (n=%d): %s in %.2fs",
        S.label,
        S.n,
        "passed" if passed else "FAILED",
        time.monotonic() - start,
    )
    return {"status": "ok", "n": S.n, "passed": passed, "properties": properties}


def run_suite(config: SuiteConfig) -> dict[str, Any]:
    """One full run. The returned dict carries no timings, so equal seeds give equal reports."""
    stats = {
        "entries": 0,
        "invalid_entries": 0,
        "properties_run": 0,
        "properties_failed": 0,
        "properties_skipped": 0,
        "errors": 0,
    }
    missing = uncovered_invariants()
    if missing:
        logger.warning("Invariants without a suite property: %s", missing)

    entries = load_all(corpus_sources(config.corpus))
    results: dict[str, Any] = {}
    for entry in entries:
        stats["entries"] += 1
        key = entry.label if entry.label not in results else entry.key
        results[key] = _run_entry(entry, config, stats)

    summary: dict[str, Any] = dict(stats)
    summary["uncovered_invariants"] = missing
    summary["all_passed"] = (
        stats["properties_failed"] == 0 and stats["invalid_entries"] == 0 and not missing
    )
    return {"config": config.to_dict(), "results": results, "summary": summary}
