"""(d+1)/2-approximation for d-bounded Max 2-CSP.

Every forest in the support of the decomposition is solved exactly; the best
assignment on the full instance wins. Since each edge lands in a random forest
with probability 2/(d+1), the weighted DP average is already at least
2/(d+1) of the optimum, and the maximum is no smaller.
"""

from fractions import Fraction

from src.core.exceptions import DegenerateInstanceError, PreconditionError
from src.modules.approx.decomposition import forest_decomposition
from src.modules.approx.models import ApproxResult, PartResult
from src.modules.approx.tree_dp import tree_dp
from src.modules.csp.models import CspInstance
from src.modules.csp.service import satisfied_count
from src.shared.enums import DecompositionMode
from src.shared.logger import log_call, logger


@log_call()
def approx_solve(
    inst: CspInstance, d: int, mode: DecompositionMode = DecompositionMode.EXACT
) -> ApproxResult:
    if inst.num_edges == 0:
        raise DegenerateInstanceError("approx_solve")
    if inst.max_degree > d:
        raise PreconditionError(f"Max degree {inst.max_degree} exceeds {d}")

    certificate = forest_decomposition(inst, d, mode)
    best = None
    results = []
    for part in certificate.parts:
        psi, forest_count = tree_dp(inst, part.edges)
        full_count = satisfied_count(inst, psi)
        results.append(PartResult(part.weight, forest_count, full_count))
        if best is None or full_count > best[1]:
            best = (psi, full_count)

    psi, count = best
    logger.info(
        f"Approximation done | edges={inst.num_edges}, parts={len(results)}, satisfied={count}"
    )
    return ApproxResult(
        assignment=psi,
        satisfied=count,
        value=Fraction(count, inst.num_edges),
        certificate=certificate,
        parts=tuple(results),
    )
