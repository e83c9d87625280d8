"""Subsampling degree reduction.

Each edge of a (d_A*C, d_B*C)-biregular instance is kept with probability p;
left vertices are then trimmed down to d_A and right vertices down to d_B by
dropping their largest-id edges.
"""

import math
from fractions import Fraction

import numpy as np

from src.core.exceptions import ParameterError, PreconditionError
from src.modules.csp.models import Assignment, CspInstance
from src.modules.csp.service import DegreeCondition, eval_assignment, validate_degrees
from src.modules.reductions.models import ReductionReport, SubsampleOverrides, SubsampleParams
from src.shared.constants import D0_NUMERATOR, LAMBDA_SCALE, PREMISE_LAMBDA_SQ_NE, UNION_BOUND_BASE
from src.shared.enums import ParamsMode
from src.shared.logger import log_call, logger

_MAX_LOG10_FLOAT = 308.0


def subsample_soundness_target(delta: float, nu: float, t: float, d_a: int, d_b: int) -> float:
    """(1/(ν − δ))(1/d_A + t/d_B)."""
    if not 0 < delta < nu:
        raise ParameterError(f"Need 0 < delta < nu (got delta={delta}, nu={nu})", parameter="delta")
    return (1 / d_a + t / d_b) / (nu - delta)


def subsample_params(
    delta: float,
    nu: float,
    t: float,
    C: int,
    d_a: int,
    d_b: int,
    a_size: int,
    override_lambda: float | None = None,
    override_p: float | None = None,
) -> SubsampleParams:
    """Parameter ledger.

    override_p may be 0, which exercises the empty-output path.
    """
    if not 0 < delta < nu <= 1:
        raise ParameterError(f"Need 0 < delta < nu <= 1 (got delta={delta}, nu={nu})", parameter="delta")
    if not 0 < t <= 1:
        raise ParameterError(f"t must lie in (0, 1], got {t}", parameter="t")
    if C < 1 or d_a < 1 or d_b < 1 or a_size < 1:
        raise ParameterError("C, d_A, d_B and |A'| must be positive")
    if override_lambda is not None and not 0 < override_lambda < 1:
        raise ParameterError(f"lambda override must lie in (0, 1), got {override_lambda}", parameter="lambda")
    if override_p is not None and not 0 <= override_p <= 1:
        raise ParameterError(f"p override must lie in [0, 1], got {override_p}", parameter="p")

    lam = LAMBDA_SCALE * min(delta, nu) if override_lambda is None else override_lambda
    if nu <= 2 * lam:
        raise ParameterError(f"nu={nu} <= 2*lambda={2 * lam}; chi undefined", parameter="nu")

    p = (1 - lam) / C if override_p is None else override_p
    d0 = D0_NUMERATOR / lam**3
    spread = 1 / d_a + t / d_b
    chi = spread / (nu - 2 * lam)

    # Second exponent is negative as written; the union bound needs its magnitude.
    first = math.log10(math.e / chi) / lam
    second = math.log10(UNION_BOUND_BASE) / abs(spread - (nu - lam) * chi)
    log10_r0 = max(first, second)
    r0 = 10**log10_r0 if log10_r0 < _MAX_LOG10_FLOAT else None

    n_e = d_a * a_size
    overridden = override_lambda is not None or override_p is not None
    faithful = not overridden and d_a >= d0 and d_b >= d0
    overrides = SubsampleOverrides(lam=override_lambda, p=override_p) if overridden else None

    return SubsampleParams(
        delta=delta,
        nu=nu,
        t=t,
        C=C,
        d_a=d_a,
        d_b=d_b,
        a_size=a_size,
        lam=lam,
        p=p,
        d0=d0,
        chi=chi,
        log10_r0=log10_r0,
        r0=r0,
        n_e=n_e,
        soundness_target=subsample_soundness_target(delta, nu, t, d_a, d_b),
        premise_ok=lam**2 * n_e >= PREMISE_LAMBDA_SQ_NE,
        mode=ParamsMode.FULL_SCALE if faithful else ParamsMode.DESK_SCALE,
        overrides=overrides,
    )


def completeness_floor(value_in: float | Fraction, params: SubsampleParams) -> float:
    """val(Π') - δ."""
    return float(value_in) - params.delta


def _trim(
    endpoint: np.ndarray, ids: np.ndarray, alive: np.ndarray, bound: int
) -> np.ndarray:
    """Keep at most bound alive edges per endpoint, the smallest ids."""
    idx = np.flatnonzero(alive)
    order = idx[np.lexsort((ids[idx], endpoint[idx]))]
    groups = endpoint[order]
    starts = np.r_[0, np.flatnonzero(groups[1:] != groups[:-1]) + 1]
    group_start = np.repeat(starts, np.diff(np.r_[starts, len(order)]))
    rank = np.arange(len(order)) - group_start
    result = alive.copy()
    result[order[rank >= bound]] = False
    return result


def _satisfied_mask(inst: CspInstance, psi: Assignment) -> np.ndarray:
    psi.validate_for(inst)
    labels = psi.labels
    return np.fromiter(
        ((labels[e.u], labels[e.v]) in e.allowed for e in inst.edges),
        dtype=bool,
        count=inst.num_edges,
    )


@log_call()
def subsample_reduce(
    inst: CspInstance,
    d_a: int,
    d_b: int,
    params: SubsampleParams,
    seed: int,
    planted: Assignment | None = None,
) -> tuple[CspInstance, ReductionReport]:
    """Keep edges with probability params.p, then trim to (d_a, d_b).

    With a planted assignment the report also carries its completeness event.
    """
    ok, _ = validate_degrees(inst, DegreeCondition.biregular(d_a * params.C, d_b * params.C))
    if not ok:
        raise PreconditionError(
            f"Input is not ({d_a * params.C}, {d_b * params.C})-biregular bipartite"
        )
    if not 0 <= params.p <= 1:
        raise ParameterError(f"p must lie in [0, 1], got {params.p}", parameter="p")

    rng = np.random.default_rng(seed)
    m = inst.num_edges
    kept = rng.random(m) < params.p
    kept_count = int(kept.sum())

    after_left = _trim(inst.edge_u, inst.edge_ids, kept, d_a)
    after_right = _trim(inst.edge_v, inst.edge_ids, after_left, d_b)
    removed_left = kept_count - int(after_left.sum())
    removed_right = int(after_left.sum()) - int(after_right.sum())
    removed = removed_left + removed_right

    result = inst.derive(e for e, alive in zip(inst.edges, after_right, strict=True) if alive)

    n_e = params.n_e
    event_e1 = (1 - 2 * params.lam) * n_e <= kept_count <= n_e
    event_e2 = removed < params.lam * kept_count

    planted_fields: dict = {}
    if planted is not None:
        satisfied = _satisfied_mask(inst, planted)
        value_in = Fraction(int(satisfied.sum()), m) if m else Fraction(0)
        kept_satisfied = int((satisfied & kept).sum())
        planted_fields = {
            "planted_event_e3": kept_satisfied >= (float(value_in) - 2 * params.lam) * n_e,
            "planted_kept_satisfied": kept_satisfied,
            "planted_value_in": float(value_in),
            "planted_value_out": (
                float(eval_assignment(result, planted)) if result.num_edges else None
            ),
        }

    report = ReductionReport(
        seed=seed,
        p=params.p,
        n_e=n_e,
        input_edges=m,
        kept_edges=kept_count,
        removed_left=removed_left,
        removed_right=removed_right,
        removed_for_degree=removed,
        output_edges=result.num_edges,
        event_e1=bool(event_e1),
        event_e2=bool(event_e2),
        **planted_fields,
    )
    logger.debug(
        f"Subsampled | seed={seed}, kept={kept_count}, removed={removed}, "
        f"E1={report.event_e1}, E2={report.event_e2}"
    )
    return result, report
