"""pipeline and sweep."""

import argparse
import asyncio

from src.cli.io import dump, read_model, write_text
from src.modules.pipelines.service import run_pipeline
from src.modules.pipelines.sweep import experiment_sweep, rows_to_csv
from src.schemas.pipeline import PipelineConfig, SweepConfig


def _pipeline(args: argparse.Namespace) -> str:
    return dump(run_pipeline(read_model(args.config, PipelineConfig)))


def _sweep(args: argparse.Namespace) -> str:
    summary = asyncio.run(experiment_sweep(read_model(args.config, SweepConfig), args.workers))
    if args.csv:
        write_text(rows_to_csv(summary.rows), args.csv)
    return dump(summary)


def register(commands: argparse._SubParsersAction) -> None:
    pipe = commands.add_parser("pipeline", help="Run one end-to-end pipeline from a JSON config")
    pipe.add_argument("--config", required=True)
    pipe.add_argument("--out", default=None)
    pipe.set_defaults(handler=_pipeline)

    sweep = commands.add_parser("sweep", help="Run a pipeline over a parameter grid and seeds")
    sweep.add_argument("--config", required=True)
    sweep.add_argument("--workers", type=int, default=None)
    sweep.add_argument("--csv", default=None, help="Also write the rows as CSV")
    sweep.add_argument("--out", default=None)
    sweep.set_defaults(handler=_sweep)
