from src.modules.pipelines.service import (
    pipeline_approx,
    pipeline_np_2csp,
    pipeline_np_clawfree,
    pipeline_ug_2csp,
    pipeline_ug_clawfree,
    run_pipeline,
)
from src.modules.pipelines.sweep import experiment_sweep, expand_cells, rows_to_csv, summarize

__all__ = [
    "run_pipeline",
    "pipeline_ug_2csp",
    "pipeline_np_2csp",
    "pipeline_ug_clawfree",
    "pipeline_np_clawfree",
    "pipeline_approx",
    "experiment_sweep",
    "expand_cells",
    "rows_to_csv",
    "summarize",
]
