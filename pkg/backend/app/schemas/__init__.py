"""Pydantic schemas for the file formats."""

from app.schemas.files import (
    CheckReportSchema,
    FunctionFile,
    RepresentationFile,
    SemigroupFile,
)

__all__ = ["SemigroupFile", "FunctionFile", "RepresentationFile", "CheckReportSchema"]
