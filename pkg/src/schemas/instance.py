"""Instance and graph schemas."""

from pydantic import Field, StrictInt

from src.schemas.common import StrictModel

__all__ = ["EdgeSchema", "BipartitionSchema", "InstanceSchema", "GraphSchema", "AssignmentSchema"]


class EdgeSchema(StrictModel):
    """Constraint edge."""
    id: StrictInt
    u: StrictInt
    v: StrictInt
    allowed: list[tuple[StrictInt, StrictInt]]


class BipartitionSchema(StrictModel):
    """Sides A and B."""
    A: list[StrictInt]
    B: list[StrictInt]


class InstanceSchema(StrictModel):
    """2-CSP instance document."""
    n: StrictInt = Field(ge=0)
    alphabets: list[StrictInt]
    bipartition: BipartitionSchema | None = None
    edges: list[EdgeSchema]


class GraphSchema(StrictModel):
    """Simple graph document."""
    n: StrictInt = Field(ge=0)
    edges: list[tuple[StrictInt, StrictInt]]


class AssignmentSchema(StrictModel):
    """Total or partial labeling; null marks an unset vertex."""
    labels: list[StrictInt | None]
