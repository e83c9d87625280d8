"""Exact optimum of a forest-shaped subinstance by dynamic programming.

A(v, σ) is the best number of satisfied forest edges inside the subtree of v
when v takes label σ. Ties go to the smallest label; vertices untouched by the
forest get label 0.
"""

from collections.abc import Iterable

import numpy as np

from src.core.exceptions import PreconditionError
from src.modules.approx.models import UnionFind
from src.modules.csp.models import Assignment, Constraint, CspInstance


def _relation(e: Constraint, rows: int, cols: int) -> np.ndarray:
    table = np.zeros((rows, cols), dtype=np.int64)
    for a, b in e.allowed:
        table[a, b] = 1
    return table


def tree_dp(inst: CspInstance, forest: Iterable[int]) -> tuple[Assignment, int]:
    """Assignment maximizing satisfied edges of forest, and that count."""
    wanted = set(forest)
    chosen = [e for e in inst.edges if e.id in wanted]
    if len(chosen) != len(wanted):
        raise PreconditionError("Forest names edge ids missing from the instance")

    uf = UnionFind(inst.n)
    adjacency: list[list[Constraint]] = [[] for _ in range(inst.n)]
    for e in chosen:
        if not uf.union(e.u, e.v):
            raise PreconditionError(f"Edge set is not a forest (edge {e.id} closes a cycle)")
        adjacency[e.u].append(e)
        adjacency[e.v].append(e)

    labels = [0] * inst.n
    visited = [False] * inst.n
    total = 0

    for root in range(inst.n):
        if visited[root] or not adjacency[root]:
            continue
        # iterative DFS: order lists parents before children
        order: list[int] = []
        parent_edge: dict[int, Constraint | None] = {root: None}
        stack = [root]
        visited[root] = True
        while stack:
            v = stack.pop()
            order.append(v)
            for e in adjacency[v]:
                child = e.v if e.u == v else e.u
                if not visited[child]:
                    visited[child] = True
                    parent_edge[child] = e
                    stack.append(child)

        table: dict[int, np.ndarray] = {v: np.zeros(inst.alphabets[v], dtype=np.int64) for v in order}
        best_child: dict[int, np.ndarray] = {}
        for v in reversed(order):
            e = parent_edge[v]
            if e is None:
                continue
            parent = e.u if e.v == v else e.v
            relation = _relation(e, inst.alphabets[e.u], inst.alphabets[e.v])
            # scores[σ_parent, τ_child]
            scores = (relation if e.v == v else relation.T) + table[v][None, :]
            best_child[v] = np.argmax(scores, axis=1)
            table[parent] += scores.max(axis=1)

        labels[root] = int(np.argmax(table[root]))
        total += int(table[root][labels[root]])
        for v in order[1:]:
            e = parent_edge[v]
            parent = e.u if e.v == v else e.v
            labels[v] = int(best_child[v][labels[parent]])

    return Assignment(tuple(labels)), total
