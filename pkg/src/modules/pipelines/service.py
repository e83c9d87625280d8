"""End-to-end pipelines from a source instance to the final reduced object.

Every run returns a RunReport; failures are recorded in it instead of raised.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from src.config import settings
from src.core.exceptions import AppException, SizeLimitError
from src.modules.approx.service import approx_solve
from src.modules.csp.codec import instance_from_schema, serialize
from src.modules.csp.generator import gen_planted, gen_random_bounded
from src.modules.csp.models import Assignment, CspInstance
from src.modules.csp.service import DegreeCondition, validate_degrees
from src.modules.graph.codec import serialize_graph
from src.modules.graph.solver import find_claw, indep_exact
from src.modules.oracles.brute import brute_val
from src.modules.reductions.balance import balance_degrees
from src.modules.reductions.copy_expand import biregular_degrees, copy_expand, lift_copy_assignment
from src.modules.reductions.fglss import fglss
from src.modules.reductions.subsample import subsample_params, subsample_reduce
from src.schemas.pipeline import PipelineConfig, RunReport
from src.shared.constants import COMPLETENESS_FACTOR, DELTA_FACTOR, FLOAT_TOLERANCE
from src.shared.enums import PipelineKind
from src.shared.logger import LogContext, logger, set_context
from src.shared.utils import canonical_json, content_hash, derive_seed

# derived seed slots
GENERATOR_SLOT = 0
REDUCTION_SLOT = 1

_SKIPPED = object()


@dataclass
class _Run:
    """Report under construction."""

    config: PipelineConfig
    params: dict | None = None
    reduction: dict | None = None
    hashes: dict[str, str] = field(default_factory=dict)
    checks: dict[str, bool | None] = field(default_factory=dict)
    values: dict[str, float | int | None] = field(default_factory=dict)
    targets: dict[str, float] = field(default_factory=dict)

    def value(self, name: str, value: int | float | Fraction | None) -> None:
        if value is None or isinstance(value, int):
            self.values[name] = value
        else:
            self.values[name] = float(value)

    def exact(self, name: str, fn: Callable[[], Any]) -> Any:
        """Oracle result, or _SKIPPED when disabled or refused by a cap."""
        if not self.config.exact_checks:
            return _SKIPPED
        try:
            return fn()
        except SizeLimitError as exc:
            logger.debug(f"Exact check skipped | check={name}, reason={exc.message}")
            return _SKIPPED


def _source(run: _Run) -> tuple[CspInstance, Assignment | None]:
    cfg = run.config
    seed = derive_seed(cfg.seed, GENERATOR_SLOT)
    if cfg.planted is not None:
        spec = cfg.planted
        planted = gen_planted(
            spec.n_a, spec.n_b, spec.d1, spec.d2, spec.r_left, spec.r_right,
            noise=spec.noise, seed=seed, extra_density=spec.extra_density,
        )
        return planted.instance, planted.planted
    if cfg.random is not None:
        spec = cfg.random
        inst = gen_random_bounded(spec.n, cfg.d, spec.alphabet, spec.num_edges, spec.density, seed)
        return inst, None
    return instance_from_schema(cfg.instance), None


def _reduce_to_bounded(
    run: _Run,
    inst: CspInstance,
    planted: Assignment | None,
    d_a: int,
    d_b: int,
    copies: tuple[int, int],
    t: float,
    nu_base: float,
) -> CspInstance:
    """copy_expand then subsample_reduce, recording ledger, events and completeness."""
    cfg = run.config
    c1, c2 = copies

    set_context(stage="copy")
    d1, d2 = biregular_degrees(inst)
    expanded = copy_expand(inst, c1, c2)
    run.hashes["expanded"] = content_hash(serialize(expanded))
    lifted = lift_copy_assignment(inst, planted, c1, c2) if planted is not None else None

    set_context(stage="subsample")
    delta = DELTA_FACTOR * cfg.epsilon
    params = subsample_params(
        delta=delta,
        nu=nu_base - delta,
        t=t,
        C=d1 * d2,
        d_a=d_a,
        d_b=d_b,
        a_size=len(expanded.bipartition.left),
        override_lambda=cfg.override_lambda,
        override_p=cfg.override_p,
    )
    run.params = params.model_dump(mode="json", by_alias=True)
    reduced, report = subsample_reduce(
        expanded, d_a, d_b, params, derive_seed(cfg.seed, REDUCTION_SLOT), planted=lifted
    )
    run.reduction = report.model_dump(mode="json")
    run.hashes["reduced"] = content_hash(serialize(reduced))

    ok, _ = validate_degrees(reduced, DegreeCondition.bounded_bipartite(d_a, d_b))
    run.checks["degree_ok"] = ok
    run.checks["event_e1"] = report.event_e1
    run.checks["event_e2"] = report.event_e2
    run.checks["event_e3"] = report.planted_event_e3

    completeness = 1 - COMPLETENESS_FACTOR * cfg.epsilon
    run.targets["completeness"] = completeness
    run.targets["soundness"] = params.soundness_target
    run.value("planted_value_in", report.planted_value_in)
    run.value("planted_value_out", report.planted_value_out)
    if report.planted_value_out is None:
        run.checks["completeness_ok"] = None
    else:
        run.checks["completeness_ok"] = report.planted_value_out >= completeness - FLOAT_TOLERANCE
    run.value("output_edges", reduced.num_edges)
    return reduced


def _exact_values(run: _Run, inst: CspInstance, reduced: CspInstance) -> None:
    before = run.exact("val_in", lambda: brute_val(inst))
    run.value("exact_value_in", None if before is _SKIPPED else before.value)
    if reduced.num_edges == 0:
        run.value("exact_value_out", None)
        return
    after = run.exact("val_out", lambda: brute_val(reduced))
    run.value("exact_value_out", None if after is _SKIPPED else after.value)


def _clawfree_checks(run: _Run, reduced: CspInstance, d_a: int, d_b: int, k: int) -> None:
    set_context(stage="fglss")
    run.checks["degree_sum_ok"] = d_a + d_b <= k
    if reduced.num_edges == 0:
        run.checks["claw_free"] = None
        run.checks["indep_matches"] = None
        return

    graph = fglss(reduced, d_a, d_b)
    run.hashes["fglss"] = content_hash(serialize_graph(graph))
    run.value("fglss_vertices", graph.n)

    claw = run.exact("claw", lambda: find_claw(graph, k))
    run.checks["claw_free"] = None if claw is _SKIPPED else claw is None

    independent = run.exact("indep", lambda: indep_exact(graph))
    best = run.exact("val_out", lambda: brute_val(reduced))
    if independent is _SKIPPED or best is _SKIPPED:
        run.checks["indep_matches"] = None
        return
    run.value("indep", independent.size)
    run.value("exact_value_out", best.value)
    run.checks["indep_matches"] = independent.size == best.satisfied


def _ug_2csp(run: _Run, inst: CspInstance, planted: Assignment | None) -> None:
    d = run.config.d
    reduced = _reduce_to_bounded(run, inst, planted, d, d, (d, d), t=1.0, nu_base=1.0)
    _exact_values(run, inst, reduced)


def _np_2csp(run: _Run, inst: CspInstance, planted: Assignment | None) -> None:
    d = run.config.d
    reduced = _reduce_to_bounded(run, inst, planted, d, d, (d, d), t=0.5, nu_base=0.5)
    _exact_values(run, inst, reduced)


def _ug_clawfree(run: _Run, inst: CspInstance, planted: Assignment | None) -> None:
    k = run.config.k
    d = k // 2
    run.value("d", d)
    reduced = _reduce_to_bounded(run, inst, planted, d, d, (d, d), t=1.0, nu_base=1.0)
    _clawfree_checks(run, reduced, d, d, k)


def _np_clawfree(run: _Run, inst: CspInstance, planted: Assignment | None) -> None:
    cfg = run.config
    split = balance_degrees(cfg.k, cfg.epsilon)
    run.value("q1", split.q1)
    run.value("q2", split.q2)
    run.value("d_a", split.d_a)
    run.value("d_b", split.d_b)
    # (c1, c2) = (d_B, d_A) makes the copy (d_A * C, d_B * C)-biregular
    reduced = _reduce_to_bounded(
        run, inst, planted, split.d_a, split.d_b, (split.d_b, split.d_a), t=0.5, nu_base=0.5
    )
    delta = DELTA_FACTOR * cfg.epsilon
    run.targets["claw_soundness"] = (3 + 2 * math.sqrt(2) + 4 * delta) / ((1 - 4 * delta) * cfg.k)
    _clawfree_checks(run, reduced, split.d_a, split.d_b, cfg.k)


def _approx(run: _Run, inst: CspInstance, planted: Assignment | None) -> None:
    d = run.config.d
    set_context(stage="approx")
    result = approx_solve(inst, d)
    guarantee = Fraction(2, d + 1)
    run.value("value", result.value)
    run.value("satisfied", result.satisfied)
    run.value("support_size", len(result.certificate.parts))
    run.checks["marginals_ok"] = result.certificate.verify(inst)
    run.targets["ratio"] = float(guarantee)

    best = run.exact("val", lambda: brute_val(inst))
    if best is _SKIPPED:
        run.checks["ratio_ok"] = None
        return
    ratio = result.value / best.value if best.value else Fraction(1)
    run.value("exact_value", best.value)
    run.value("ratio", ratio)
    run.checks["ratio_ok"] = ratio >= guarantee


_PIPELINES: dict[PipelineKind, Callable[[_Run, CspInstance, Assignment | None], None]] = {
    PipelineKind.UG_2CSP: _ug_2csp,
    PipelineKind.NP_2CSP: _np_2csp,
    PipelineKind.UG_CLAWFREE: _ug_clawfree,
    PipelineKind.NP_CLAWFREE: _np_clawfree,
    PipelineKind.APPROX: _approx,
}


def run_pipeline(config: PipelineConfig) -> RunReport:
    """Run one pipeline. The same config always yields the same report."""
    config_dump = config.model_dump(mode="json", exclude_none=True)
    run = _Run(config=config)
    error = None

    with LogContext(run_id=content_hash(canonical_json(config_dump))[:8], stage="source"):
        try:
            inst, planted = _source(run)
            run.hashes["input"] = content_hash(serialize(inst))
            _PIPELINES[config.kind](run, inst, planted)
        except AppException as exc:
            logger.warning(
                f"Pipeline failed | kind={config.kind.value}, code={exc.code}, error={exc.message}"
            )
            error = {"code": exc.code, "message": exc.message}
        except Exception as exc:
            logger.exception(f"Pipeline crashed | kind={config.kind.value}")
            error = {"code": "INTERNAL_ERROR", "message": f"{type(exc).__name__}: {exc}"}
        else:
            logger.info(f"Pipeline done | kind={config.kind.value}, checks={run.checks}")

    return RunReport(
        kind=config.kind,
        seed=config.seed,
        ok=error is None,
        error=error,
        config=config_dump,
        caps=settings.caps,
        params=run.params,
        reduction=run.reduction,
        hashes=run.hashes,
        checks=run.checks,
        values=run.values,
        targets=run.targets,
    )


def _as_kind(kind: PipelineKind) -> Callable[[PipelineConfig], RunReport]:
    def runner(config: PipelineConfig) -> RunReport:
        return run_pipeline(config.model_copy(update={"kind": kind}))

    runner.__name__ = f"pipeline_{kind.value}"
    return runner


pipeline_ug_2csp = _as_kind(PipelineKind.UG_2CSP)
pipeline_np_2csp = _as_kind(PipelineKind.NP_2CSP)
pipeline_ug_clawfree = _as_kind(PipelineKind.UG_CLAWFREE)
pipeline_np_clawfree = _as_kind(PipelineKind.NP_CLAWFREE)
pipeline_approx = _as_kind(PipelineKind.APPROX)
