"""Convex decomposition of x_e = 2/(d+1) into forests.

Exact mode partitions the doubled graph 2G into d+1 forests with matroid-union
augmenting paths. The two copies of an edge never share a forest, so under the
uniform distribution every edge lies in exactly two of d+1 forests. Identical
forests are merged and the support is then thinned to at most |E|+1 parts.

Arboricity mode partitions G itself into ceil((d+1)/2) forests, uniform.
"""

from collections import deque
from fractions import Fraction

from src.core.exceptions import InternalInvariantError, PreconditionError
from src.modules.approx.models import ForestDistribution, ForestPart
from src.modules.csp.models import CspInstance
from src.shared.enums import DecompositionMode
from src.shared.logger import log_call, logger


class ForestPartition:
    """k forests over a multiset of edges, grown one element at a time."""

    def __init__(self, n: int, k: int, ends: list[tuple[int, int]]):
        self.n = n
        self.k = k
        self.ends = ends                       # element -> (u, v)
        self.home: list[int | None] = [None] * len(ends)
        self.adj: list[list[dict[int, int]]] = [[{} for _ in range(n)] for _ in range(k)]

    def _link(self, i: int, x: int) -> None:
        u, v = self.ends[x]
        self.adj[i][u][x] = v
        self.adj[i][v][x] = u
        self.home[x] = i

    def _cut(self, i: int, x: int) -> None:
        u, v = self.ends[x]
        del self.adj[i][u][x]
        del self.adj[i][v][x]
        self.home[x] = None

    def _path(self, i: int, source: int, target: int) -> list[int] | None:
        """Elements on the forest-i path source -> target, None if disconnected."""
        if source == target:
            return []
        parent: dict[int, tuple[int, int]] = {source: (-1, -1)}
        queue = deque([source])
        while queue:
            w = queue.popleft()
            for x, nxt in self.adj[i][w].items():
                if nxt in parent:
                    continue
                parent[nxt] = (w, x)
                if nxt == target:
                    path = []
                    node = target
                    while node != source:
                        node, via = parent[node]
                        path.append(via)
                    return path
                queue.append(nxt)
        return None

    def insert(self, element: int) -> bool:
        """Shortest augmenting path; False when element fits nowhere."""
        label: dict[int, tuple[int, int]] = {element: (-1, -1)}
        queue = deque([element])
        while queue:
            x = queue.popleft()
            u, v = self.ends[x]
            for i in range(self.k):
                if self.home[x] == i:
                    continue
                cycle = self._path(i, u, v)
                if cycle is None:
                    self._augment(x, i, label)
                    return True
                for y in cycle:
                    if y not in label:
                        label[y] = (x, i)
                        queue.append(y)
        return False

    def _augment(self, last: int, free: int, label: dict[int, tuple[int, int]]) -> None:
        moves = [(last, free)]
        cur = last
        while label[cur][0] != -1:
            prev, i = label[cur]
            moves.append((prev, i))
            cur = prev
        # moves[j] = (element, forest it moves into); an element leaves its old home first
        for x, _ in moves:
            if self.home[x] is not None:
                self._cut(self.home[x], x)
        for x, i in moves:
            self._link(i, x)

    def forests(self) -> list[list[int]]:
        result: list[list[int]] = [[] for _ in range(self.k)]
        for x, i in enumerate(self.home):
            result[i].append(x)
        return result


def _check_input(inst: CspInstance, d: int) -> None:
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    if inst.max_degree > d:
        raise PreconditionError(f"Max degree {inst.max_degree} exceeds {d}")
    if inst.has_parallel_edges:
        raise PreconditionError("Forest decomposition needs a simple constraint graph")


def _partition(inst: CspInstance, k: int, copies: int) -> list[frozenset[int]]:
    ends = [(e.u, e.v) for e in inst.edges for _ in range(copies)]
    owner = [e.id for e in inst.edges for _ in range(copies)]
    engine = ForestPartition(inst.n, k, ends)
    for x in range(len(ends)):
        if not engine.insert(x):
            raise InternalInvariantError(
                f"Edge {owner[x]} does not fit into {k} forests",
                residual={owner[y]: copies for y in range(x, len(ends))},
            )
    return [frozenset(owner[x] for x in forest) for forest in engine.forests()]


def _null_vector(columns: list[list[Fraction]]) -> list[Fraction] | None:
    """Nonzero y with Σ_j y_j · columns[j] = 0, exact; None when independent."""
    rows = len(columns[0])
    cols = len(columns)
    matrix = [[columns[j][r] for j in range(cols)] for r in range(rows)]
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, rows) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        head = matrix[row][col]
        matrix[row] = [x / head for x in matrix[row]]
        for r in range(rows):
            if r != row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[row], strict=True)]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    free = next((c for c in range(cols) if c not in pivots), None)
    if free is None:
        return None
    y = [Fraction(0)] * cols
    y[free] = Fraction(1)
    for r, col in enumerate(pivots):
        y[col] = -matrix[r][free]
    return y


def _thin_support(inst: CspInstance, parts: list[ForestPart]) -> list[ForestPart]:
    """Carathéodory step: drop parts until at most |E| + 1 remain, marginals kept."""
    limit = inst.num_edges + 1
    parts = list(parts)
    while len(parts) > limit:
        columns = [[Fraction(int(e.id in p.edges)) for e in inst.edges] + [Fraction(1)] for p in parts]
        y = _null_vector(columns)
        if y is None:
            break
        positive = [j for j in range(len(parts)) if y[j] > 0]
        if not positive:
            y = [-v for v in y]
            positive = [j for j in range(len(parts)) if y[j] > 0]
        step = min(parts[j].weight / y[j] for j in positive)
        parts = [
            ForestPart(weight=p.weight - step * y[j], edges=p.edges) for j, p in enumerate(parts)
        ]
        parts = [p for p in parts if p.weight > 0]
    return parts


def _merge(forests: list[frozenset[int]], weight: Fraction) -> list[ForestPart]:
    totals: dict[frozenset[int], Fraction] = {}
    for forest in forests:
        totals[forest] = totals.get(forest, Fraction(0)) + weight
    ordered = sorted(totals.items(), key=lambda item: (-len(item[0]), sorted(item[0])))
    return [ForestPart(weight=w, edges=f) for f, w in ordered]


@log_call()
def forest_decomposition(
    inst: CspInstance, d: int, mode: DecompositionMode = DecompositionMode.EXACT
) -> ForestDistribution:
    _check_input(inst, d)
    if mode == DecompositionMode.EXACT:
        k, copies = d + 1, 2
    else:
        k, copies = (d + 2) // 2, 1

    forests = _partition(inst, k, copies)
    parts = _merge(forests, Fraction(1, k))
    if mode == DecompositionMode.EXACT:
        parts = _thin_support(inst, parts)

    marginals = {
        e.id: sum((p.weight for p in parts if e.id in p.edges), Fraction(0)) for e in inst.edges
    }
    dist = ForestDistribution(d=d, mode=mode, parts=tuple(parts), marginals=marginals)
    problems = dist.violations(inst)
    if problems:
        raise InternalInvariantError(
            f"Decomposition broke its invariants: {problems[0]}",
            residual={e_id: float(dist.uniform_floor - m) for e_id, m in marginals.items()},
        )
    logger.debug(f"Forest decomposition | mode={mode.value}, d={d}, parts={len(parts)}")
    return dist
