"""Copy expansion of a biregular bipartite instance.

Left vertex a becomes d1*c1 copies (a, i, j) and right vertex b becomes d2*c2
copies; every original edge is replicated across all copy pairs, so the value
is unchanged and degrees become (c2*d1*d2, c1*d1*d2).
"""

from itertools import product

from src.core.exceptions import ParameterError, PreconditionError
from src.modules.csp.models import Assignment, Bipartition, Constraint, CspInstance
from src.modules.csp.service import side_degree
from src.shared.logger import log_call, logger


def biregular_degrees(inst: CspInstance) -> tuple[int, int]:
    """(d1, d2) of a biregular bipartite instance, else PreconditionError."""
    if inst.bipartition is None:
        raise PreconditionError("Instance is not bipartite")
    d1, d2 = side_degree(inst, left=True), side_degree(inst, left=False)
    if d1 is None or d2 is None or d1 < 1 or d2 < 1:
        raise PreconditionError("Instance is not biregular with positive degrees")
    return d1, d2


def copy_origin(inst: CspInstance, c1: int, c2: int) -> list[int]:
    """Original vertex of every vertex of copy_expand(inst, c1, c2)."""
    d1, d2 = biregular_degrees(inst)
    origin = [a for a in inst.bipartition.left for _ in range(d1 * c1)]
    origin += [b for b in inst.bipartition.right for _ in range(d2 * c2)]
    return origin


@log_call()
def copy_expand(inst: CspInstance, c1: int, c2: int) -> CspInstance:
    if c1 < 1 or c2 < 1:
        raise ParameterError(f"Copy counts must be >= 1 (got c1={c1}, c2={c2})")
    d1, d2 = biregular_degrees(inst)
    left, right = inst.bipartition.left, inst.bipartition.right
    left_block, right_block = d1 * c1, d2 * c2
    left_pos = {a: i for i, a in enumerate(left)}
    right_pos = {b: i for i, b in enumerate(right)}
    offset = len(left) * left_block

    edges: list[Constraint] = []
    for e in inst.edges:
        base_u = left_pos[e.u] * left_block
        base_v = offset + right_pos[e.v] * right_block
        for x, y in product(range(left_block), range(right_block)):
            edges.append(Constraint(id=len(edges), u=base_u + x, v=base_v + y, allowed=e.allowed))

    n = offset + len(right) * right_block
    alphabets = tuple(inst.alphabets[a] for a in left for _ in range(left_block)) + tuple(
        inst.alphabets[b] for b in right for _ in range(right_block)
    )
    result = CspInstance(
        n=n,
        alphabets=alphabets,
        edges=tuple(edges),
        bipartition=Bipartition(left=tuple(range(offset)), right=tuple(range(offset, n))),
    )
    logger.info(
        f"Copy expansion | n={inst.n}->{n}, edges={inst.num_edges}->{result.num_edges}, "
        f"degrees=({c2 * d1 * d2},{c1 * d1 * d2})"
    )
    return result


def lift_copy_assignment(inst: CspInstance, psi: Assignment, c1: int, c2: int) -> Assignment:
    """ψ'(v, i, j) = ψ(v)."""
    psi.validate_for(inst)
    return Assignment(tuple(psi.labels[v] for v in copy_origin(inst, c1, c2)))
