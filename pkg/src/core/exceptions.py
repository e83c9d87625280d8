"""Custom toolkit exceptions."""

from typing import Any


class AppException(Exception):
    """Base toolkit exception."""

    def __init__(self, message: str, code: str | None = None):
        self.message = message
        self.code = code or "APP_ERROR"
        super().__init__(self.message)


class ValidationError(AppException):
    """Domain validation error (labels, alphabets, vertex ranges)."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message=message, code="VALIDATION_ERROR")
        self.field = field


class ParseError(AppException):
    """Malformed JSON input."""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(message=f"{location}: {message}", code="PARSE_ERROR")
        self.location = location


class DegenerateInstanceError(AppException):
    """Value operation on an instance without edges."""

    def __init__(self, operation: str):
        super().__init__(
            message=f"{operation} is undefined on an instance with zero edges",
            code="DEGENERATE_INSTANCE",
        )
        self.operation = operation


class SizeLimitError(AppException):
    """Exact computation would exceed a configured cap."""

    def __init__(self, what: str, limit: int, actual: int):
        super().__init__(
            message=f"{what} size {actual} exceeds cap {limit}",
            code="SIZE_LIMIT",
        )
        self.limit = limit
        self.actual = actual


class StructureError(AppException):
    """Graph does not have the structure an operation requires."""

    def __init__(self, message: str):
        super().__init__(message=message, code="STRUCTURE_ERROR")


class ParameterError(AppException):
    """Parameter outside its domain."""

    def __init__(self, message: str, parameter: str | None = None):
        super().__init__(message=message, code="PARAMETER_ERROR")
        self.parameter = parameter


class PreconditionError(AppException):
    """Input instance violates an operation's precondition."""

    def __init__(self, message: str):
        super().__init__(message=message, code="PRECONDITION_ERROR")


class ConstructionError(AppException):
    """Randomized construction gave up."""

    def __init__(self, message: str, best: float | None = None):
        super().__init__(message=message, code="CONSTRUCTION_ERROR")
        self.best = best


class InternalInvariantError(AppException):
    """An invariant that should be impossible to break was broken."""

    def __init__(self, message: str, residual: Any = None):
        super().__init__(message=message, code="INTERNAL_INVARIANT")
        self.residual = residual
