"""Label-extended graph: independent sets are consistent partial assignments."""

from src.core.exceptions import PreconditionError
from src.modules.csp.models import CspInstance
from src.modules.graph.models import SimpleGraph
from src.shared.logger import log_call, logger


@log_call()
def label_extended(inst: CspInstance, d: int | None = None) -> SimpleGraph:
    """Vertices (v, σ) ordered by v then σ.

    Labels of one variable form a clique; (u, σ_u) and (v, σ_v) are adjacent when
    some constraint on (u, v) forbids (σ_u, σ_v).
    """
    if d is not None and inst.max_degree > d:
        raise PreconditionError(f"Max degree {inst.max_degree} exceeds {d}")

    offsets = [0] * inst.n
    for v in range(1, inst.n):
        offsets[v] = offsets[v - 1] + inst.alphabets[v - 1]
    labels = [(v, s) for v in range(inst.n) for s in range(inst.alphabets[v])]

    edges: set[tuple[int, int]] = set()
    for v in range(inst.n):
        base = offsets[v]
        size = inst.alphabets[v]
        edges.update((base + a, base + b) for a in range(size) for b in range(a + 1, size))

    for e in inst.edges:
        bu, bv = offsets[e.u], offsets[e.v]
        for a in range(inst.alphabets[e.u]):
            for b in range(inst.alphabets[e.v]):
                if (a, b) not in e.allowed:
                    edges.add((bu + a, bv + b))

    graph = SimpleGraph.from_edges(len(labels), edges, labels=labels)
    logger.debug(f"Label-extended graph | vertices={graph.n}, edges={graph.num_edges}")
    return graph
