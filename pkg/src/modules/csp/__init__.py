"""2-CSP core: instances, evaluation, generators, codec."""

from src.modules.csp.codec import parse, serialize
from src.modules.csp.generator import PlantedInstance, gen_planted, gen_random_bounded
from src.modules.csp.models import (
    Assignment,
    Bipartition,
    Constraint,
    CspInstance,
    DegreeProfile,
    PartialAssignment,
)
from src.modules.csp.service import (
    DegreeCondition,
    degree_profile,
    eval_assignment,
    partial_is_consistent,
    satisfied_count,
    side_degree,
    validate_degrees,
)

__all__ = [
    "Assignment",
    "Bipartition",
    "Constraint",
    "CspInstance",
    "DegreeCondition",
    "DegreeProfile",
    "PartialAssignment",
    "PlantedInstance",
    "degree_profile",
    "eval_assignment",
    "gen_planted",
    "gen_random_bounded",
    "parse",
    "partial_is_consistent",
    "satisfied_count",
    "serialize",
    "side_degree",
    "validate_degrees",
]
