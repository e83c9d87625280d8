"""Forest distributions and approximation results."""

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from src.modules.csp.models import Assignment, CspInstance
from src.shared.constants import FLOAT_TOLERANCE
from src.shared.enums import DecompositionMode


class UnionFind:
    """Disjoint sets with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False when they were already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


def is_forest(inst: CspInstance, edge_ids: Iterable[int]) -> bool:
    wanted = set(edge_ids)
    uf = UnionFind(inst.n)
    return all(uf.union(e.u, e.v) for e in inst.edges if e.id in wanted)


@dataclass(frozen=True)
class ForestPart:
    weight: Fraction
    edges: frozenset[int]


@dataclass(frozen=True)
class ForestDistribution:
    """Convex combination of forests with per-edge marginals."""

    d: int
    mode: DecompositionMode
    parts: tuple[ForestPart, ...]
    marginals: dict[int, Fraction] = field(default_factory=dict)

    @property
    def target(self) -> Fraction:
        return Fraction(2, self.d + 1)

    def violations(self, inst: CspInstance) -> list[str]:
        """Broken invariants, empty when the distribution is valid for inst."""
        problems = []
        total = sum((p.weight for p in self.parts), Fraction(0))
        if total != 1:
            problems.append(f"weights sum to {total}")
        if any(p.weight < 0 for p in self.parts):
            problems.append("negative weight")
        for i, part in enumerate(self.parts):
            if not is_forest(inst, part.edges):
                problems.append(f"part {i} contains a cycle")

        for e in inst.edges:
            mass = sum((p.weight for p in self.parts if e.id in p.edges), Fraction(0))
            if mass != self.marginals.get(e.id):
                problems.append(f"stored marginal of edge {e.id} is stale")
            if self.mode == DecompositionMode.EXACT:
                if abs(float(mass - self.target)) > FLOAT_TOLERANCE:
                    problems.append(f"edge {e.id} marginal {mass} != {self.target}")
            elif float(mass) < float(self.uniform_floor) - FLOAT_TOLERANCE:
                problems.append(f"edge {e.id} marginal {mass} < {self.uniform_floor}")
        return problems

    @property
    def uniform_floor(self) -> Fraction:
        """Marginal guaranteed by the mode."""
        if self.mode == DecompositionMode.EXACT:
            return self.target
        return Fraction(1, (self.d + 2) // 2)

    def verify(self, inst: CspInstance) -> bool:
        return not self.violations(inst)


@dataclass(frozen=True)
class PartResult:
    weight: Fraction
    forest_satisfied: int
    total_satisfied: int


@dataclass(frozen=True)
class ApproxResult:
    assignment: Assignment
    satisfied: int
    value: Fraction
    certificate: ForestDistribution
    parts: tuple[PartResult, ...]

    @property
    def weighted_forest_satisfied(self) -> Fraction:
        """Σ weight · DP count, the expectation the guarantee is argued on."""
        return sum((p.weight * p.forest_satisfied for p in self.parts), Fraction(0))
