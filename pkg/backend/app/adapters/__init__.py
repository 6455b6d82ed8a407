"""Corpus sources and file ingestion."""

from app.adapters.base_adapter import CorpusEntry, CorpusSource, load_all
from app.adapters.builtin_adapter import DEFAULT_CORPUS, BuiltinSource, resolve_builtin
from app.adapters.file_adapter import FileSource

__all__ = [
    "CorpusEntry",
    "CorpusSource",
    "load_all",
    "BuiltinSource",
    "FileSource",
    "DEFAULT_CORPUS",
    "resolve_builtin",
]
