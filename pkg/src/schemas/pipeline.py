"""Pipeline and sweep schemas."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.schemas.instance import InstanceSchema
from src.shared.enums import PipelineKind

__all__ = [
    "PlantedSpec",
    "RandomSpec",
    "PipelineConfig",
    "SweepConfig",
    "RunReport",
    "SweepRow",
    "SweepCellSummary",
    "SweepSummary",
]


class PlantedSpec(BaseModel):
    """gen_planted arguments (seed comes from the run)."""
    model_config = ConfigDict(extra="forbid")

    n_a: int = Field(ge=1)
    n_b: int = Field(ge=1)
    d1: int = Field(ge=1)
    d2: int = Field(ge=1)
    r_left: int = Field(ge=1)
    r_right: int | None = Field(default=None, ge=1)
    noise: float = Field(default=0.0, ge=0.0, le=1.0)
    extra_density: float = Field(default=0.1, ge=0.0, le=1.0)


class RandomSpec(BaseModel):
    """gen_random_bounded arguments (seed comes from the run)."""
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=2)
    alphabet: int = Field(ge=1)
    num_edges: int = Field(ge=1)
    density: float = Field(default=0.5, ge=0.0, le=1.0)


class PipelineConfig(BaseModel):
    """One run. Exactly one instance source: planted, random or an embedded instance."""
    model_config = ConfigDict(extra="forbid")

    kind: PipelineKind
    seed: int = 0
    epsilon: float = Field(default=0.1, gt=0.0)
    d: int | None = Field(default=None, ge=1)
    k: int | None = Field(default=None, ge=3)
    planted: PlantedSpec | None = None
    random: RandomSpec | None = None
    instance: InstanceSchema | None = None
    override_lambda: float | None = None
    override_p: float | None = None
    exact_checks: bool = True

    @model_validator(mode="after")
    def _check_sources(self) -> "PipelineConfig":
        sources = [x for x in (self.planted, self.random, self.instance) if x is not None]
        if len(sources) != 1:
            raise ValueError("exactly one of planted, random, instance is required")
        if self.kind in (PipelineKind.UG_CLAWFREE, PipelineKind.NP_CLAWFREE):
            if self.k is None:
                raise ValueError(f"{self.kind.value} needs k")
        elif self.d is None:
            raise ValueError(f"{self.kind.value} needs d")
        if self.kind == PipelineKind.APPROX and self.random is None and self.instance is None:
            raise ValueError("approx needs a random source or an instance")
        if self.kind != PipelineKind.APPROX and self.random is not None:
            raise ValueError("reduction pipelines need a biregular source (planted or instance)")
        return self


class SweepConfig(BaseModel):
    """Base config plus a grid of overrides; each cell runs once per seed."""
    model_config = ConfigDict(extra="forbid")

    base: PipelineConfig
    grid: list[dict] = Field(default_factory=list)
    seeds: list[int] = Field(default_factory=lambda: [0])


class RunReport(BaseModel):
    """Everything a run produced. No timestamps: identical input, identical bytes."""

    kind: PipelineKind
    seed: int
    ok: bool
    error: dict | None = None
    config: dict
    caps: dict[str, int]
    params: dict | None = None
    reduction: dict | None = None
    hashes: dict[str, str] = Field(default_factory=dict)
    checks: dict[str, bool | None] = Field(default_factory=dict)
    values: dict[str, float | int | None] = Field(default_factory=dict)
    targets: dict[str, float] = Field(default_factory=dict)


class SweepRow(BaseModel):
    cell: int
    seed: int
    derived_seed: int
    kind: str
    params: str
    ok: bool
    error: str | None = None
    event_e1: bool | None = None
    event_e2: bool | None = None
    event_e3: bool | None = None
    completeness_ok: bool | None = None
    value: float | None = None
    ratio: float | None = None


class SweepCellSummary(BaseModel):
    cell: int
    params: str
    runs: int
    failures: int
    e1_rate: float | None = None
    e2_rate: float | None = None
    e3_rate: float | None = None
    completeness_rate: float | None = None
    ratio_min: float | None = None
    ratio_mean: float | None = None


class SweepSummary(BaseModel):
    rows: list[SweepRow] = Field(default_factory=list)
    cells: list[SweepCellSummary] = Field(default_factory=list)
