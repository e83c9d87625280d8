"""Graph generators."""

import networkx as nx

from src.core.exceptions import ParameterError
from src.modules.graph.models import SimpleGraph


def random_regular_graph(n: int, t: int, seed: int) -> SimpleGraph:
    """Random t-regular simple graph on n vertices (networkx pairing model).

    t = n - 1 gives the complete graph.
    """
    if not 1 <= t < n:
        raise ParameterError(f"Degree must satisfy 1 <= t < n (got t={t}, n={n})", parameter="t")
    if (t * n) % 2:
        raise ParameterError(f"t * n must be even (got t={t}, n={n})", parameter="t")
    if t == n - 1:
        return complete_graph(n)
    return SimpleGraph.from_networkx(nx.random_regular_graph(t, n, seed=seed))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_networkx(nx.complete_graph(n))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_networkx(nx.cycle_graph(n))
