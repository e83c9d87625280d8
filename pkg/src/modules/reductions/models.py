"""Subsampling ledger and report."""

from pydantic import BaseModel, ConfigDict, Field

from src.shared.enums import ParamsMode


class SubsampleOverrides(BaseModel):
    """Manually forced values (desk-scale runs)."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lam: float | None = Field(default=None, alias="lambda")
    p: float | None = None


class SubsampleParams(BaseModel):
    """Every quantity the subsampling reduction is parameterized by.

    Without overrides the fields follow the closed-form choices exactly; with
    overrides, mode is desk_scale and λ/p carry the forced values.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    delta: float
    nu: float
    t: float
    C: int
    d_a: int
    d_b: int
    a_size: int

    lam: float = Field(alias="lambda")
    p: float
    d0: float
    chi: float
    log10_r0: float
    r0: float | None = Field(default=None, description="None when it overflows a double")
    n_e: int
    soundness_target: float
    premise_ok: bool = Field(description="lambda^2 * n_E >= 100")
    mode: ParamsMode
    overrides: SubsampleOverrides | None = None


class ReductionReport(BaseModel):
    """Counts and events of one subsample_reduce run."""

    model_config = ConfigDict(frozen=True)

    seed: int
    p: float
    n_e: int
    input_edges: int
    kept_edges: int
    removed_left: int
    removed_right: int
    removed_for_degree: int
    output_edges: int
    event_e1: bool
    event_e2: bool
    planted_event_e3: bool | None = None
    planted_kept_satisfied: int | None = None
    planted_value_in: float | None = None
    planted_value_out: float | None = None
