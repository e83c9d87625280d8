"""Bipartite doubling: V -> V1 ∪ V2, each constraint placed on both crossings."""

from src.modules.csp.models import Assignment, Bipartition, Constraint, CspInstance
from src.shared.logger import logger


def bipartite_double(inst: CspInstance) -> CspInstance:
    """Vertex v becomes v (left) and v + n (right).

    Edge e = (u, v) becomes (u1, v2) with R_e and (v1, u2) with R_e transposed,
    with ids 2*e.id and 2*e.id + 1.
    """
    n = inst.n
    edges: list[Constraint] = []
    for e in inst.edges:
        edges.append(Constraint(id=2 * e.id, u=e.u, v=e.v + n, allowed=e.allowed))
        transposed = frozenset((b, a) for a, b in e.allowed)
        edges.append(Constraint(id=2 * e.id + 1, u=e.v, v=e.u + n, allowed=transposed))
    logger.debug(f"Bipartite doubling | n={n}->{2 * n}, edges={inst.num_edges}->{len(edges)}")
    return CspInstance(
        n=2 * n,
        alphabets=inst.alphabets + inst.alphabets,
        edges=tuple(edges),
        bipartition=Bipartition(left=tuple(range(n)), right=tuple(range(n, 2 * n))),
    )


def lift_double_assignment(psi: Assignment) -> Assignment:
    """Copy ψ to both sides."""
    return Assignment(psi.labels + psi.labels)
