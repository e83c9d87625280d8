"""2-CSP data model."""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.core.exceptions import ValidationError


@dataclass(frozen=True, slots=True)
class Constraint:
    """One constraint edge: ordered endpoints and the allowed label pairs."""

    id: int
    u: int
    v: int
    allowed: frozenset[tuple[int, int]]

    def satisfied(self, label_u: int, label_v: int) -> bool:
        return (label_u, label_v) in self.allowed


@dataclass(frozen=True)
class Bipartition:
    """Left side A and right side B, both sorted."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    @cached_property
    def left_set(self) -> frozenset[int]:
        return frozenset(self.left)

    @cached_property
    def right_set(self) -> frozenset[int]:
        return frozenset(self.right)


@dataclass(frozen=True)
class CspInstance:
    """Constraint graph on vertices 0..n-1 with alphabets [0, |Σ_v|).

    Edges are kept sorted by id. Parallel edges are allowed as long as their
    ids differ.
    """

    n: int
    alphabets: tuple[int, ...]
    edges: tuple[Constraint, ...]
    bipartition: Bipartition | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabets", tuple(self.alphabets))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))
        self._validate()

    def _validate(self) -> None:
        if self.n < 0:
            raise ValidationError(f"Vertex count must be >= 0, got {self.n}", field="n")
        if len(self.alphabets) != self.n:
            raise ValidationError(
                f"Expected {self.n} alphabet sizes, got {len(self.alphabets)}", field="alphabets"
            )
        for v, size in enumerate(self.alphabets):
            if size < 1:
                raise ValidationError(f"Alphabet of vertex {v} is empty", field=f"alphabets[{v}]")

        seen: set[int] = set()
        for e in self.edges:
            where = f"edges[id={e.id}]"
            if e.id in seen:
                raise ValidationError(f"Duplicate edge id {e.id}", field=where)
            seen.add(e.id)
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValidationError(f"Endpoint out of range ({e.u}, {e.v})", field=where)
            if e.u == e.v:
                raise ValidationError(f"Self-loop on vertex {e.u}", field=where)
            size_u, size_v = self.alphabets[e.u], self.alphabets[e.v]
            for a, b in e.allowed:
                if not (0 <= a < size_u and 0 <= b < size_v):
                    raise ValidationError(
                        f"Allowed pair ({a}, {b}) outside alphabets {size_u}x{size_v}",
                        field=where,
                    )

        if self.bipartition is not None:
            left, right = self.bipartition.left_set, self.bipartition.right_set
            if len(left) != len(self.bipartition.left) or len(right) != len(self.bipartition.right):
                raise ValidationError("Bipartition lists a vertex twice", field="bipartition")
            if left & right or len(left) + len(right) != self.n or any(
                not 0 <= v < self.n for v in left | right
            ):
                raise ValidationError("Bipartition must split 0..n-1", field="bipartition")
            for e in self.edges:
                if e.u not in left or e.v not in right:
                    raise ValidationError(
                        f"Edge {e.id} does not cross A -> B", field=f"edges[id={e.id}]"
                    )

    # === Derivation ===
    def derive(self, edges: Iterable[Constraint]) -> "CspInstance":
        """Same vertices, alphabets and bipartition, a subset of already valid edges.

        Skips validation; edges must come from this instance in id order.
        """
        obj = object.__new__(CspInstance)
        object.__setattr__(obj, "n", self.n)
        object.__setattr__(obj, "alphabets", self.alphabets)
        object.__setattr__(obj, "edges", tuple(edges))
        object.__setattr__(obj, "bipartition", self.bipartition)
        return obj

    # === Views ===
    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    @cached_property
    def edge_u(self) -> np.ndarray:
        return np.fromiter((e.u for e in self.edges), dtype=np.int64, count=len(self.edges))

    @cached_property
    def edge_v(self) -> np.ndarray:
        return np.fromiter((e.v for e in self.edges), dtype=np.int64, count=len(self.edges))

    @cached_property
    def edge_ids(self) -> np.ndarray:
        return np.fromiter((e.id for e in self.edges), dtype=np.int64, count=len(self.edges))

    @cached_property
    def degrees(self) -> np.ndarray:
        counts = np.bincount(self.edge_u, minlength=self.n) + np.bincount(
            self.edge_v, minlength=self.n
        )
        return counts.astype(np.int64)

    @cached_property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @cached_property
    def has_parallel_edges(self) -> bool:
        pairs = {(min(e.u, e.v), max(e.u, e.v)) for e in self.edges}
        return len(pairs) != len(self.edges)

    def incident(self) -> list[list[Constraint]]:
        """Constraints touching each vertex, in id order."""
        result: list[list[Constraint]] = [[] for _ in range(self.n)]
        for e in self.edges:
            result[e.u].append(e)
            result[e.v].append(e)
        return result


@dataclass(frozen=True)
class Assignment:
    """Total labeling ψ."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))

    def validate_for(self, inst: CspInstance) -> None:
        if len(self.labels) != inst.n:
            raise ValidationError(
                f"Assignment has {len(self.labels)} labels for {inst.n} vertices", field="labels"
            )
        for v, (label, size) in enumerate(zip(self.labels, inst.alphabets, strict=True)):
            if not 0 <= label < size:
                raise ValidationError(
                    f"Label {label} of vertex {v} outside alphabet of size {size}",
                    field=f"labels[{v}]",
                )


@dataclass(frozen=True)
class PartialAssignment:
    """Labeling where None stands for unset (⊥)."""

    labels: tuple[int | None, ...]

    @property
    def size(self) -> int:
        return sum(1 for x in self.labels if x is not None)

    def validate_for(self, inst: CspInstance) -> None:
        if len(self.labels) != inst.n:
            raise ValidationError(
                f"Partial assignment has {len(self.labels)} entries for {inst.n} vertices",
                field="labels",
            )
        for v, (label, size) in enumerate(zip(self.labels, inst.alphabets, strict=True)):
            if label is not None and not 0 <= label < size:
                raise ValidationError(
                    f"Label {label} of vertex {v} outside alphabet of size {size}",
                    field=f"labels[{v}]",
                )


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees recomputed from the edge list. Side multisets are sorted."""

    max_degree: int
    degrees: tuple[int, ...]
    left_degrees: tuple[int, ...] | None = None
    right_degrees: tuple[int, ...] | None = None
