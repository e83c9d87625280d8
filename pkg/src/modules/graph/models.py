"""Simple undirected graphs."""

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from src.core.exceptions import ValidationError


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices 0..n-1, sorted neighbor tuples.

    labels optionally names each vertex (FGLSS triples, (v, σ) pairs); they do
    not take part in equality.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[Hashable, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise ValidationError(f"Adjacency has {len(self.adjacency)} rows for {self.n} vertices", field="adjacency")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValidationError("One label per vertex required", field="labels")
        for v, row in enumerate(self.adjacency):
            for u in row:
                if u == v:
                    raise ValidationError(f"Self-loop on vertex {v}", field=f"adjacency[{v}]")
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise ValidationError(f"Asymmetric adjacency at ({v}, {u})", field=f"adjacency[{v}]")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValidationError(f"Neighbors of {v} not sorted/unique", field=f"adjacency[{v}]")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ) -> "SimpleGraph":
        """Build from an edge list; repeated edges collapse, self-loops are rejected."""
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"Edge ({u}, {v}) out of range", field="edges")
            if u == v:
                raise ValidationError(f"Self-loop on vertex {u}", field="edges")
            rows[u].add(v)
            rows[v].add(u)
        return cls(
            n=n,
            adjacency=tuple(tuple(sorted(r)) for r in rows),
            labels=None if labels is None else tuple(labels),
        )

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "SimpleGraph":
        nodes = sorted(g.nodes())
        index = {x: i for i, x in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in g.edges()))

    # === Views ===
    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Lexicographically sorted (u, v) with u < v."""
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood bitmasks."""
        return tuple(sum(1 << u for u in row) for row in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def is_independent(self, vertices: Iterable[int]) -> bool:
        chosen = 0
        for v in vertices:
            if self.masks[v] & chosen or (chosen >> v) & 1:
                return False
            chosen |= 1 << v
        return True

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[w]) for u in vertices for w in self.adjacency[u] if w in index]
        return SimpleGraph.from_edges(len(vertices), edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class ClawWitness:
    """Induced K_{1,k}: center plus k pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, ...]

    def verify(self, g: SimpleGraph) -> bool:
        return (
            all(g.has_edge(self.center, x) for x in self.leaves)
            and self.center not in self.leaves
            and g.is_independent(self.leaves)
        )


@dataclass(frozen=True)
class IndependentSet:
    size: int
    witness: tuple[int, ...]
