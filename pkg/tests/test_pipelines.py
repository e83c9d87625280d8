import pydantic
import pytest

from src.config import settings
from src.modules.pipelines import pipeline_approx, pipeline_ug_2csp, run_pipeline
from src.schemas.pipeline import PipelineConfig
from src.shared.enums import PipelineKind

PLANTED = {"n_a": 4, "n_b": 4, "d1": 1, "d2": 1, "r_left": 2, "extra_density": 0.0}
TINY = {"n_a": 2, "n_b": 2, "d1": 1, "d2": 1, "r_left": 2, "extra_density": 0.0}


def _config(**kwargs) -> PipelineConfig:
    return PipelineConfig.model_validate(kwargs)


@pytest.fixture
def ug_config():
    return _config(kind="ug_2csp", d=2, seed=5, planted=PLANTED, override_p=1.0)


# === Reduction pipelines ===
def test_report_is_deterministic(ug_config):
    first = run_pipeline(ug_config).model_dump_json()
    second = run_pipeline(ug_config).model_dump_json()
    assert first == second


def test_ug_2csp_keeps_planted_assignment(ug_config):
    report = run_pipeline(ug_config)
    assert report.ok
    assert report.kind == PipelineKind.UG_2CSP
    assert report.seed == 5
    assert report.caps == settings.caps
    assert {"input", "expanded", "reduced"} <= set(report.hashes)
    assert report.checks["degree_ok"] is True
    assert report.checks["event_e1"] is True
    assert report.checks["event_e2"] is True
    assert report.checks["completeness_ok"] is True
    assert report.values["planted_value_out"] == 1.0
    assert report.values["output_edges"] == 16
    assert report.values["exact_value_in"] == 1.0
    assert report.values["exact_value_out"] == 1.0
    assert report.params["overrides"]["p"] == 1.0


def test_exact_checks_can_be_disabled(ug_config):
    report = run_pipeline(ug_config.model_copy(update={"exact_checks": False}))
    assert report.ok
    assert report.values["exact_value_in"] is None
    assert report.values["exact_value_out"] is None


def test_kind_wrapper_overrides_kind(ug_config):
    report = pipeline_ug_2csp(ug_config.model_copy(update={"kind": PipelineKind.NP_2CSP}))
    assert report.kind == PipelineKind.UG_2CSP


def test_np_clawfree_graph_is_claw_free():
    report = run_pipeline(_config(kind="np_clawfree", k=6, seed=1, planted=TINY))
    assert report.ok, report.error
    assert report.values["d_a"] == 3
    assert report.values["d_b"] == 2
    assert report.checks["degree_ok"] is True
    assert report.checks["degree_sum_ok"] is True
    assert report.checks["claw_free"] is True
    assert report.checks["indep_matches"] is True
    assert "fglss" in report.hashes
    assert report.targets["claw_soundness"] > 0


def test_ug_clawfree_uses_half_k():
    report = run_pipeline(_config(kind="ug_clawfree", k=4, seed=2, planted=PLANTED, override_p=1.0))
    assert report.ok, report.error
    assert report.values["d"] == 2
    assert report.checks["claw_free"] is True
    assert report.checks["indep_matches"] is True


def test_failure_is_recorded(ug_config):
    report = run_pipeline(ug_config.model_copy(update={"epsilon": 200.0}))
    assert not report.ok
    assert report.error["code"] == "PARAMETER_ERROR"
    assert report.hashes["input"]


# === Approximation pipeline ===
def test_approx_meets_ratio():
    random_spec = {"n": 8, "alphabet": 2, "num_edges": 10, "density": 0.5}
    for seed in range(5):
        report = pipeline_approx(_config(kind="approx", d=3, seed=seed, random=random_spec))
        assert report.ok, report.error
        assert report.checks["marginals_ok"] is True
        assert report.checks["ratio_ok"] is True
        assert report.targets["ratio"] == pytest.approx(0.5)


# === Config validation ===
@pytest.mark.parametrize(
    "payload",
    [
        {"kind": "ug_2csp", "planted": PLANTED},
        {"kind": "ug_2csp", "d": 2},
        {"kind": "ug_2csp", "d": 2, "planted": PLANTED, "random": {"n": 4, "alphabet": 2, "num_edges": 2}},
        {"kind": "np_clawfree", "planted": PLANTED},
        {"kind": "approx", "d": 2, "planted": PLANTED},
        {"kind": "np_2csp", "d": 2, "random": {"n": 4, "alphabet": 2, "num_edges": 2}},
        {"kind": "ug_2csp", "d": 2, "planted": PLANTED, "bogus": 1},
    ],
)
def test_invalid_configs(payload):
    with pytest.raises(pydantic.ValidationError):
        PipelineConfig.model_validate(payload)
