"""Dictatorship test schemas."""

from typing import ClassVar

from pydantic import Field, StrictInt

from src.schemas.common import ResultRecord, StrictModel
from src.schemas.instance import GraphSchema

__all__ = ["TestFunctionSchema", "GadgetSchema", "DictTestRecord"]


class TestFunctionSchema(StrictModel):
    """F: [R]^L -> [R] as a flat table in lexicographic order."""

    __test__: ClassVar[bool] = False

    R: StrictInt = Field(ge=1)
    L: StrictInt = Field(ge=1)
    table: list[StrictInt]


class GadgetSchema(StrictModel):
    """Predicate graph on [R] plus its accepted (i, j) pairs, both orientations."""
    R: StrictInt = Field(ge=1)
    t: StrictInt = Field(ge=1)
    graph: GraphSchema
    pairs: list[tuple[StrictInt, StrictInt]]


class DictTestRecord(ResultRecord):
    gadget: GadgetSchema
