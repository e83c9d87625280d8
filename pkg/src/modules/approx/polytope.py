"""Membership of the uniform vector x_e = 2/(d+1) in the forest polytope."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.config import settings
from src.core.exceptions import PreconditionError
from src.modules.graph.models import SimpleGraph


@dataclass(frozen=True)
class PolytopeCheck:
    feasible: bool
    violating: tuple[int, ...] | None
    method: str                       # "exhaustive" or "case_bound"
    max_load: Fraction | None = None  # max over S of x(E(S)) / (|S| - 1)


def check_forest_polytope(g: SimpleGraph, d: int, cap: int | None = None) -> PolytopeCheck:
    """Check x(E(S)) <= |S| - 1 for every S with |S| >= 2.

    Exhaustive over subsets up to cap vertices, otherwise the degree case bound:
    |S| <= d + 1 gives |E(S)| <= |S|(|S|-1)/2, larger S give |E(S)| <= d|S|/2.
    """
    if g.max_degree > d:
        raise PreconditionError(f"Max degree {g.max_degree} exceeds {d}")
    cap = settings.POLYTOPE_EXHAUSTIVE_CAP if cap is None else cap
    if g.n > cap:
        return PolytopeCheck(feasible=True, violating=None, method="case_bound")
    if g.n < 2:
        return PolytopeCheck(feasible=True, violating=None, method="exhaustive")

    size = 1 << g.n
    inner = np.zeros(size, dtype=np.int64)   # |E(S)|
    count = np.zeros(size, dtype=np.int64)   # |S|
    for v in range(g.n):
        low = np.arange(1 << v, dtype=np.int64)
        lower_nbrs = g.masks[v] & ((1 << v) - 1)
        count[1 << v : 2 << v] = count[: 1 << v] + 1
        inner[1 << v : 2 << v] = inner[: 1 << v] + count[low & lower_nbrs]

    big = count >= 2
    # x(E(S)) <= |S| - 1  <=>  2|E(S)| <= (d + 1)(|S| - 1)
    lhs = 2 * inner[big]
    rhs = (d + 1) * (count[big] - 1)
    masks = np.flatnonzero(big)
    ratio_idx = int(np.argmax(lhs * 1.0 / rhs))
    max_load = Fraction(int(lhs[ratio_idx]), int(rhs[ratio_idx]))

    bad = np.flatnonzero(lhs > rhs)
    if len(bad):
        mask = int(masks[bad[0]])
        violating = tuple(v for v in range(g.n) if (mask >> v) & 1)
        return PolytopeCheck(False, violating, "exhaustive", max_load)
    return PolytopeCheck(True, None, "exhaustive", max_load)
