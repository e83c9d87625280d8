"""Forest-decomposition approximation for bounded-degree Max 2-CSP."""

from src.modules.approx.decomposition import ForestPartition, forest_decomposition
from src.modules.approx.models import (
    ApproxResult,
    ForestDistribution,
    ForestPart,
    PartResult,
    UnionFind,
    is_forest,
)
from src.modules.approx.polytope import PolytopeCheck, check_forest_polytope
from src.modules.approx.service import approx_solve
from src.modules.approx.tree_dp import tree_dp

__all__ = [
    "ApproxResult",
    "ForestDistribution",
    "ForestPart",
    "ForestPartition",
    "PartResult",
    "PolytopeCheck",
    "UnionFind",
    "approx_solve",
    "check_forest_polytope",
    "forest_decomposition",
    "is_forest",
    "tree_dp",
]
