"""File and stream helpers. "-" means stdin/stdout."""

import sys
from pathlib import Path
from typing import TypeVar

import pydantic

from src.core.exceptions import ParseError
from src.modules.csp.codec import parse, raise_parse_error
from src.modules.csp.models import CspInstance
from src.modules.graph.codec import parse_graph
from src.modules.graph.models import SimpleGraph
from src.shared.utils import canonical_json

ModelT = TypeVar("ModelT", bound=pydantic.BaseModel)


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"Cannot read {path}: {exc.strerror}") from exc


def write_text(text: str, path: str | None = None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    Path(path).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def read_instance(path: str) -> CspInstance:
    return parse(read_text(path))


def read_graph(path: str) -> SimpleGraph:
    return parse_graph(read_text(path))


def read_model(path: str, model: type[ModelT]) -> ModelT:
    try:
        return model.model_validate_json(read_text(path))
    except pydantic.ValidationError as exc:
        raise_parse_error(exc)


def dump(obj: dict | list | pydantic.BaseModel) -> str:
    """Canonical JSON for anything a command prints."""
    if isinstance(obj, pydantic.BaseModel):
        obj = obj.model_dump(mode="json", by_alias=True)
    return canonical_json(obj)
