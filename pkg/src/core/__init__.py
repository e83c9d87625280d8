"""Core infrastructure."""

from src.core.exceptions import (
    AppException,
    ConstructionError,
    DegenerateInstanceError,
    InternalInvariantError,
    ParameterError,
    ParseError,
    PreconditionError,
    SizeLimitError,
    StructureError,
    ValidationError,
)

__all__ = [
    "AppException",
    "ConstructionError",
    "DegenerateInstanceError",
    "InternalInvariantError",
    "ParameterError",
    "ParseError",
    "PreconditionError",
    "SizeLimitError",
    "StructureError",
    "ValidationError",
]
