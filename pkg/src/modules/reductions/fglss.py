"""FGLSS graph of a 2-CSP instance.

One vertex per (edge, satisfying pair); two vertices are adjacent when they
give some CSP vertex different labels.
"""

from collections import defaultdict
from itertools import combinations

from src.core.exceptions import DegenerateInstanceError, PreconditionError
from src.modules.csp.models import CspInstance
from src.modules.csp.service import DegreeCondition, validate_degrees
from src.modules.graph.models import SimpleGraph
from src.shared.logger import log_call, logger


@log_call()
def fglss(inst: CspInstance, d_a: int | None = None, d_b: int | None = None) -> SimpleGraph:
    """Vertex labels are (edge id, σ_u, σ_v), ordered by edge id then pair.

    With d_a/d_b the instance must be bipartite and (d_a, d_b)-bounded.
    """
    if inst.num_edges == 0:
        raise DegenerateInstanceError("fglss")
    if d_a is not None or d_b is not None:
        if d_a is None or d_b is None:
            raise PreconditionError("Give both d_A and d_B or neither")
        ok, _ = validate_degrees(inst, DegreeCondition.bounded_bipartite(d_a, d_b))
        if not ok:
            raise PreconditionError(f"Instance is not bipartite ({d_a}, {d_b})-bounded")

    labels: list[tuple[int, int, int]] = []
    # CSP vertex -> label -> FGLSS vertices giving it that label
    by_label: dict[int, dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
    for e in inst.edges:
        for su, sv in sorted(e.allowed):
            x = len(labels)
            labels.append((e.id, su, sv))
            by_label[e.u][su].append(x)
            by_label[e.v][sv].append(x)

    edges: set[tuple[int, int]] = set()
    for groups in by_label.values():
        for (_, first), (_, second) in combinations(groups.items(), 2):
            edges.update((x, y) for x in first for y in second)

    graph = SimpleGraph.from_edges(len(labels), edges, labels=labels)
    logger.debug(f"FGLSS graph | vertices={graph.n}, edges={graph.num_edges}")
    return graph
