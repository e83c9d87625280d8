"""Evaluation and degree checks for 2-CSP instances."""

from dataclasses import dataclass
from fractions import Fraction

from src.core.exceptions import DegenerateInstanceError
from src.modules.csp.models import Assignment, CspInstance, DegreeProfile, PartialAssignment
from src.shared.enums import DegreeMode
from src.shared.logger import logger


@dataclass(frozen=True)
class DegreeCondition:
    """bounded(d), bounded_bipartite(d_A, d_B) or biregular(d_1, d_2)."""

    mode: DegreeMode
    left: int
    right: int | None = None

    @classmethod
    def bounded(cls, d: int) -> "DegreeCondition":
        return cls(DegreeMode.BOUNDED, d)

    @classmethod
    def bounded_bipartite(cls, d_a: int, d_b: int) -> "DegreeCondition":
        return cls(DegreeMode.BOUNDED_BIPARTITE, d_a, d_b)

    @classmethod
    def biregular(cls, d1: int, d2: int) -> "DegreeCondition":
        return cls(DegreeMode.BIREGULAR, d1, d2)

    def __str__(self) -> str:
        if self.right is None:
            return f"{self.mode.value}({self.left})"
        return f"{self.mode.value}({self.left},{self.right})"


def satisfied_count(inst: CspInstance, psi: Assignment) -> int:
    """Number of satisfied edges; parallel edges count separately."""
    psi.validate_for(inst)
    labels = psi.labels
    return sum(1 for e in inst.edges if (labels[e.u], labels[e.v]) in e.allowed)


def eval_assignment(inst: CspInstance, psi: Assignment) -> Fraction:
    """val_Π(ψ) as an exact fraction."""
    psi.validate_for(inst)
    if inst.num_edges == 0:
        raise DegenerateInstanceError("eval_assignment")
    return Fraction(satisfied_count(inst, psi), inst.num_edges)


def partial_is_consistent(inst: CspInstance, partial: PartialAssignment) -> bool:
    """Every edge with both endpoints set is satisfied."""
    partial.validate_for(inst)
    labels = partial.labels
    for e in inst.edges:
        a, b = labels[e.u], labels[e.v]
        if a is not None and b is not None and (a, b) not in e.allowed:
            return False
    return True


def degree_profile(inst: CspInstance) -> DegreeProfile:
    degrees = tuple(int(x) for x in inst.degrees)
    left = right = None
    if inst.bipartition is not None:
        left = tuple(sorted(degrees[a] for a in inst.bipartition.left))
        right = tuple(sorted(degrees[b] for b in inst.bipartition.right))
    return DegreeProfile(
        max_degree=max(degrees, default=0),
        degrees=degrees,
        left_degrees=left,
        right_degrees=right,
    )


def validate_degrees(inst: CspInstance, condition: DegreeCondition) -> tuple[bool, DegreeProfile]:
    """Check a degree condition exactly. Never raises."""
    profile = degree_profile(inst)

    if condition.mode == DegreeMode.BOUNDED:
        return profile.max_degree <= condition.left, profile

    if profile.left_degrees is None or profile.right_degrees is None:
        logger.debug(f"Degree check on non-bipartite instance | condition={condition}")
        return False, profile

    if condition.mode == DegreeMode.BOUNDED_BIPARTITE:
        ok = all(x <= condition.left for x in profile.left_degrees) and all(
            x <= condition.right for x in profile.right_degrees
        )
    else:
        ok = all(x == condition.left for x in profile.left_degrees) and all(
            x == condition.right for x in profile.right_degrees
        )
    return ok, profile


def side_degree(inst: CspInstance, left: bool) -> int | None:
    """Common degree of one side, or None when the side is not regular."""
    if inst.bipartition is None:
        return None
    side = inst.bipartition.left if left else inst.bipartition.right
    values = {int(inst.degrees[v]) for v in side}
    return values.pop() if len(values) == 1 else None
