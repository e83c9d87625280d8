"""Instance transformations."""

from src.modules.reductions.balance import DegreeSplit, balance_degrees
from src.modules.reductions.copy_expand import copy_expand, copy_origin, lift_copy_assignment
from src.modules.reductions.doubling import bipartite_double, lift_double_assignment
from src.modules.reductions.fglss import fglss
from src.modules.reductions.label_extended import label_extended
from src.modules.reductions.models import ReductionReport, SubsampleOverrides, SubsampleParams
from src.modules.reductions.subsample import (
    completeness_floor,
    subsample_params,
    subsample_reduce,
    subsample_soundness_target,
)

__all__ = [
    "DegreeSplit",
    "ReductionReport",
    "SubsampleOverrides",
    "SubsampleParams",
    "balance_degrees",
    "bipartite_double",
    "completeness_floor",
    "copy_expand",
    "copy_origin",
    "fglss",
    "label_extended",
    "lift_copy_assignment",
    "lift_double_assignment",
    "subsample_params",
    "subsample_reduce",
    "subsample_soundness_target",
]
