"""Common schemas."""

from pydantic import BaseModel, ConfigDict

__all__ = ["StrictModel", "ErrorResponse", "ResultRecord"]


class StrictModel(BaseModel):
    """Rejects unknown keys."""

    model_config = ConfigDict(extra="forbid")


class ErrorResponse(BaseModel):
    """Error document printed on stderr by the CLI."""
    error: str
    code: str
    detail: dict | None = None


class ResultRecord(BaseModel):
    """{inputs, value, witness?} record of the oracle commands."""
    inputs: dict
    value: float | int | str | None
    exact: str | None = None
    witness: list | None = None
