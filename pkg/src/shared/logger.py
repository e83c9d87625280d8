import asyncio
import sys
import uuid
from contextvars import ContextVar
from functools import wraps
from time import perf_counter
from typing import Any, Callable

from loguru import logger

from src.config import SRC_DIR, settings

# === Context Variables ===
run_id_var: ContextVar[str] = ContextVar("run_id", default="-")
stage_var: ContextVar[str] = ContextVar("stage", default="-")

# (file name, level, retention, full tracebacks)
_FILE_SINKS = (
    ("bdcsp.log", "INFO", "7 days", False),
    ("errors.log", "ERROR", "30 days", True),
)


def get_context() -> dict:
    """Current run id and pipeline stage."""
    return {"run_id": run_id_var.get(), "stage": stage_var.get()}


def set_context(run_id: str | None = None, stage: str | None = None) -> None:
    if run_id is not None:
        run_id_var.set(run_id)
    if stage is not None:
        stage_var.set(stage)


def new_run_id() -> str:
    return uuid.uuid4().hex[:8]


def context_patcher(record: dict) -> None:
    record["extra"].update(get_context())


# === Formatters ===
def _format(record: dict, colored: bool) -> str:
    run_id = record["extra"].get("run_id", "-")
    stage = record["extra"].get("stage", "-")
    if not colored:
        return (
            f"{{time:YYYY-MM-DD HH:mm:ss}} | {{level: <8}} | {run_id} | {stage} | "
            f"{{name}}:{{function}}:{{line}} | {{message}}\n{{exception}}"
        )
    run_part = "<dim>-</dim>" if run_id == "-" else f"<yellow>{run_id}</yellow>"
    stage_part = "<dim>-</dim>" if stage == "-" else f"<magenta>{stage}</magenta>"
    return (
        f"<green>{{time:HH:mm:ss}}</green> | <level>{{level: <8}}</level> | "
        f"{run_part} | {stage_part} | <cyan>{{name}}:{{line}}</cyan> | "
        f"<level>{{message}}</level>\n{{exception}}"
    )


def console_formatter(record: dict) -> str:
    return _format(record, colored=True)


def file_formatter(record: dict) -> str:
    return _format(record, colored=False)


# === Decorators ===
def _safe_repr(obj: Any, max_len: int = 100) -> str:
    try:
        text = repr(obj)
    except Exception:
        return f"<{type(obj).__name__}>"
    return text if len(text) <= max_len else text[:max_len] + "..."


def log_call(level: str = "DEBUG", log_args: bool = False, max_arg_length: int = 100):
    """Log entry, exit and elapsed time of a public operation; failures at WARNING."""

    def decorator(func: Callable) -> Callable:
        name = func.__qualname__

        def enter(args: tuple) -> float:
            suffix = f" | args={_safe_repr(args, max_arg_length)}" if log_args and args else ""
            logger.log(level, f"→ {name}{suffix}")
            return perf_counter()

        def failed(start: float, exc: Exception) -> None:
            logger.warning(
                f"✗ {name} | FAILED | {perf_counter() - start:.3f}s | {type(exc).__name__}: {exc}"
            )

        def done(start: float) -> None:
            logger.log(level, f"← {name} | OK | {perf_counter() - start:.3f}s")

        if asyncio.iscoroutinefunction(func):

            @wraps(func)
            async def async_wrapper(*args, **kwargs):
                start = enter(args)
                try:
                    result = await func(*args, **kwargs)
                except Exception as exc:
                    failed(start, exc)
                    raise
                done(start)
                return result

            return async_wrapper

        @wraps(func)
        def sync_wrapper(*args, **kwargs):
            start = enter(args)
            try:
                result = func(*args, **kwargs)
            except Exception as exc:
                failed(start, exc)
                raise
            done(start)
            return result

        return sync_wrapper

    return decorator


# === Logger Setup ===
def _add_file(path, level: str, retention: str, traceback: bool, **extra) -> None:
    logger.add(
        path,
        level=level,
        format=file_formatter,
        enqueue=True,
        encoding="utf-8",
        rotation="10 MB",
        retention=retention,
        compression="zip",
        diagnose=traceback,
        backtrace=traceback,
        **extra,
    )


def setup_logger(level: str | None = None):
    """Console sink on stderr (stdout carries JSON artifacts); file sinks when LOG_DIR is set."""
    logger.remove()
    logger.configure(patcher=context_patcher)
    logger.add(
        sys.stderr,
        level=level or settings.LOG_LEVEL,
        format=console_formatter,
        colorize=True,
        diagnose=False,
        backtrace=False,
    )

    if settings.LOG_DIR is None:
        return logger

    logs_dir = settings.LOG_DIR
    logs_dir.mkdir(parents=True, exist_ok=True)
    for file_name, file_level, retention, traceback in _FILE_SINKS:
        _add_file(logs_dir / file_name, file_level, retention, traceback)

    # one DEBUG file per domain package: csp.log, reductions.log, ...
    for package in sorted((SRC_DIR / "modules").iterdir()):
        if package.is_dir() and not package.name.startswith("_"):
            _add_file(
                logs_dir / f"{package.name}.log",
                "DEBUG",
                "7 days",
                False,
                filter=lambda record, name=package.name: f"modules.{name}" in record["name"],
            )

    return logger


# === Context Manager ===
class LogContext:
    """Run id and stage for the duration of a block; restores the previous values."""

    def __init__(self, run_id: str | None = None, stage: str | None = None):
        self.run_id = run_id or new_run_id()
        self.stage = stage
        self._saved: dict | None = None

    def __enter__(self):
        self._saved = get_context()
        set_context(run_id=self.run_id, stage=self.stage)
        return self

    def __exit__(self, *args):
        set_context(**self._saved)

    async def __aenter__(self):
        return self.__enter__()

    async def __aexit__(self, *args):
        self.__exit__(*args)


logger = setup_logger()
