"""Parameter sweeps: grid cells x seeds, run concurrently, summarized per cell."""

import asyncio
import csv
import io
from statistics import fmean

import pydantic

from src.config import settings
from src.core.exceptions import ValidationError
from src.modules.pipelines.service import run_pipeline
from src.schemas.pipeline import PipelineConfig, RunReport, SweepCellSummary, SweepConfig, SweepRow, SweepSummary
from src.shared.constants import SWEEP_CSV_COLUMNS
from src.shared.enums import PipelineKind
from src.shared.logger import log_call, logger
from src.shared.utils import canonical_json, derive_seed


def _merge(base: dict, override: dict) -> dict:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def expand_cells(config: SweepConfig) -> list[PipelineConfig | ValidationError]:
    """One validated config per grid entry, in grid order; invalid entries come back as their error."""
    base = config.base.model_dump(mode="json", exclude_none=True)
    cells: list[PipelineConfig | ValidationError] = []
    for index, override in enumerate(config.grid):
        merged = _merge(base, override)
        # a cell that names one source replaces the base source
        for source in ("planted", "random", "instance"):
            if source in override:
                for other in {"planted", "random", "instance"} - {source}:
                    merged.pop(other, None)
        try:
            cells.append(PipelineConfig.model_validate(merged))
        except pydantic.ValidationError as exc:
            logger.warning(f"Grid cell {index} is invalid | {exc.errors()[0]['msg']}")
            cells.append(
                ValidationError(f"Grid cell {index} is invalid: {exc.errors()[0]['msg']}", field=f"grid[{index}]")
            )
    return cells


def _failed_row(cell: int, seed: int, params: str, kind: str, code: str, message: str) -> SweepRow:
    return SweepRow(
        cell=cell,
        seed=seed,
        derived_seed=derive_seed(seed, cell),
        kind=kind,
        params=params,
        ok=False,
        error=f"{code}: {message}",
    )


def _row(cell: int, seed: int, params: str, report: RunReport) -> SweepRow:
    checks, values = report.checks, report.values
    if report.kind == PipelineKind.APPROX:
        value = values.get("value")
    else:
        value = values.get("planted_value_out")
    error = f"{report.error['code']}: {report.error['message']}" if report.error else None
    return SweepRow(
        cell=cell,
        seed=seed,
        derived_seed=report.seed,
        kind=report.kind.value,
        params=params,
        ok=report.ok,
        error=error,
        event_e1=checks.get("event_e1"),
        event_e2=checks.get("event_e2"),
        event_e3=checks.get("event_e3"),
        completeness_ok=checks.get("completeness_ok"),
        value=value,
        ratio=values.get("ratio"),
    )


def _rate(flags: list[bool | None]) -> float | None:
    known = [x for x in flags if x is not None]
    return sum(known) / len(known) if known else None


def summarize(rows: list[SweepRow]) -> list[SweepCellSummary]:
    """Per-cell event and completeness rates, worst and mean ratio."""
    by_cell: dict[int, list[SweepRow]] = {}
    for row in rows:
        by_cell.setdefault(row.cell, []).append(row)

    summaries = []
    for cell, group in sorted(by_cell.items()):
        ratios = [r.ratio for r in group if r.ratio is not None]
        summaries.append(
            SweepCellSummary(
                cell=cell,
                params=group[0].params,
                runs=len(group),
                failures=sum(1 for r in group if not r.ok),
                e1_rate=_rate([r.event_e1 for r in group]),
                e2_rate=_rate([r.event_e2 for r in group]),
                e3_rate=_rate([r.event_e3 for r in group]),
                completeness_rate=_rate([r.completeness_ok for r in group]),
                ratio_min=min(ratios) if ratios else None,
                ratio_mean=fmean(ratios) if ratios else None,
            )
        )
    return summaries


@log_call(level="INFO")
async def experiment_sweep(config: SweepConfig, workers: int | None = None) -> SweepSummary:
    """Run every (cell, seed) pair; rows come back in cell-major, seed-minor order.

    Each run's seed is derived from (seed, cell) so cells never share randomness.
    Invalid cells and crashed runs become failed rows; the sweep never aborts.
    """
    cells = expand_cells(config)
    limit = asyncio.Semaphore(workers or settings.SWEEP_WORKERS)
    base_kind = config.base.kind.value

    async def run_one(cell: int, seed: int, cfg: PipelineConfig | ValidationError) -> SweepRow:
        params = canonical_json(config.grid[cell])
        if isinstance(cfg, ValidationError):
            kind = str(config.grid[cell].get("kind", base_kind))
            return _failed_row(cell, seed, params, kind, cfg.code, cfg.message)
        child = cfg.model_copy(update={"seed": derive_seed(seed, cell)})
        try:
            async with limit:
                report = await asyncio.to_thread(run_pipeline, child)
        except Exception as exc:
            logger.exception(f"Sweep run crashed | cell={cell}, seed={seed}")
            return _failed_row(cell, seed, params, cfg.kind.value, "INTERNAL_ERROR", f"{type(exc).__name__}: {exc}")
        return _row(cell, seed, params, report)

    tasks = [
        run_one(index, seed, cfg)
        for index, cfg in enumerate(cells)
        for seed in config.seeds
    ]
    rows = list(await asyncio.gather(*tasks))
    logger.info(
        f"Sweep done | cells={len(cells)}, seeds={len(config.seeds)}, rows={len(rows)}, "
        f"failures={sum(1 for r in rows if not r.ok)}"
    )
    return SweepSummary(rows=rows, cells=summarize(rows))


def rows_to_csv(rows: list[SweepRow]) -> str:
    """CSV with a fixed header; booleans as true/false, missing values empty."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=SWEEP_CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = {}
        for key, value in row.model_dump().items():
            if value is None:
                record[key] = ""
            elif isinstance(value, bool):
                record[key] = "true" if value else "false"
            else:
                record[key] = value
        writer.writerow(record)
    return buffer.getvalue()
