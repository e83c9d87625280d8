"""Expander predicate P ⊆ [R]² and its CSP(P) instances."""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from math import sqrt

import networkx as nx
import numpy as np

from src.config import settings
from src.core.exceptions import ConstructionError, ParameterError, StructureError
from src.modules.csp.models import Bipartition, Constraint, CspInstance
from src.modules.graph.generators import random_regular_graph
from src.modules.graph.models import SimpleGraph
from src.modules.graph.spectral import second_eigenvalue
from src.shared.logger import log_call, logger
from src.shared.utils import derive_seed


@dataclass(frozen=True)
class PredicateGadget:
    """t-regular H on [R]; P holds both orientations of every edge of H."""

    R: int
    t: int
    graph: SimpleGraph
    rho: float
    attempts: int = 1

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.R) for j in self.graph.adjacency[i])

    @cached_property
    def pair_array(self) -> np.ndarray:
        return np.asarray(self.pairs, dtype=np.int64).reshape(-1, 2)

    @cached_property
    def predicate(self) -> np.ndarray:
        """R x R boolean membership matrix of P."""
        table = np.zeros((self.R, self.R), dtype=bool)
        table[self.pair_array[:, 0], self.pair_array[:, 1]] = True
        return table


def oplus(x: int, y: int, R: int) -> int:
    """Wrap-around addition on {1, ..., R}."""
    return x + y if x + y <= R else x + y - R


@log_call()
def build_gadget(
    R: int,
    t: int,
    seed: int,
    c_accept: float | None = None,
    max_retries: int | None = None,
) -> PredicateGadget:
    """Sample t-regular graphs on [R] until λ₂ <= c_accept / √t."""
    if not 1 <= t < R:
        raise ParameterError(f"Need 1 <= t < R (got t={t}, R={R})", parameter="t")
    if (t * R) % 2:
        raise ParameterError(f"t * R must be even (got t={t}, R={R})", parameter="t")
    c_accept = settings.GADGET_C_ACCEPT if c_accept is None else c_accept
    max_retries = settings.GADGET_MAX_RETRIES if max_retries is None else max_retries
    threshold = c_accept / sqrt(t)

    best: float | None = None
    for attempt in range(max_retries):
        graph = random_regular_graph(R, t, derive_seed(seed, attempt))
        try:
            rho = second_eigenvalue(graph)
        except StructureError:
            # disconnected samples have λ₂ = 1
            continue
        best = rho if best is None else min(best, rho)
        if rho <= threshold:
            logger.info(f"Gadget accepted | R={R}, t={t}, rho={rho:.4f}, attempts={attempt + 1}")
            return PredicateGadget(R=R, t=t, graph=graph, rho=rho, attempts=attempt + 1)

    raise ConstructionError(
        f"No t-regular graph with lambda2 <= {threshold:.4f} in {max_retries} tries (best {best})",
        best=best,
    )


def _bipartite_sides(pattern: SimpleGraph) -> list[int]:
    g = pattern.to_networkx()
    if not nx.is_bipartite(g):
        raise StructureError("Pattern graph is not bipartite")
    coloring = nx.bipartite.color(g)
    return [coloring[v] for v in range(pattern.n)]


def instantiate_csp(
    gadget: PredicateGadget,
    pattern: SimpleGraph,
    shifts: Sequence[tuple[int, int]] | None = None,
    seed: int = 0,
) -> CspInstance:
    """CSP(P) on a bipartite pattern with shifted relations.

    shifts[i] = (s_u, s_v) for the i-th pattern edge, oriented left -> right,
    values in 0..R-1 (0 is the shift R); drawn from seed when omitted.
    """
    R = gadget.R
    sides = _bipartite_sides(pattern)
    if shifts is None:
        rng = np.random.default_rng(seed)
        shifts = [tuple(int(x) for x in row) for row in rng.integers(R, size=(pattern.num_edges, 2))]
    if len(shifts) != pattern.num_edges:
        raise ParameterError(f"Expected {pattern.num_edges} shift pairs, got {len(shifts)}")

    member = gadget.predicate
    edges = []
    for idx, ((a, b), (s_u, s_v)) in enumerate(zip(pattern.edges, shifts, strict=True)):
        if not (0 <= s_u < R and 0 <= s_v < R):
            raise ParameterError(f"Shift of edge {idx} outside [0, {R})", parameter="shifts")
        u, v = (a, b) if sides[a] == 0 else (b, a)
        t_u, t_v = s_u or R, s_v or R
        allowed = frozenset(
            (x, y)
            for x in range(R)
            for y in range(R)
            if member[oplus(x + 1, t_u, R) - 1, oplus(y + 1, t_v, R) - 1]
        )
        edges.append(Constraint(id=idx, u=u, v=v, allowed=allowed))

    left = tuple(v for v in range(pattern.n) if sides[v] == 0)
    right = tuple(v for v in range(pattern.n) if sides[v] == 1)
    return CspInstance(
        n=pattern.n,
        alphabets=(R,) * pattern.n,
        edges=tuple(edges),
        bipartition=Bipartition(left=left, right=right),
    )


def sample_mu(gadget: PredicateGadget, count: int, seed: int) -> np.ndarray:
    """count x 2 draws from the uniform distribution over P."""
    rng = np.random.default_rng(seed)
    return gadget.pair_array[rng.integers(len(gadget.pairs), size=count)]
