"""Command-line application: parser assembly and error mapping."""

import argparse
import sys

from src.cli.commands import COMMAND_GROUPS
from src.cli.io import write_text
from src.core.exceptions import AppException
from src.schemas.common import ErrorResponse
from src.shared.logger import LogContext, logger, setup_logger

_ERROR_EXIT = 1
_DETAIL_FIELDS = ("field", "location", "parameter", "limit", "actual", "best", "residual")


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bdcsp",
        description="Reductions, approximation and oracles for bounded-degree Max 2-CSP.",
    )
    parser.add_argument("--log-level", default=None, help="Override BDCSP_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)
    for group in COMMAND_GROUPS:
        group.register(commands)
    return parser


def error_response(exc: AppException) -> ErrorResponse:
    detail = {}
    for name in _DETAIL_FIELDS:
        value = getattr(exc, name, None)
        if value is not None:
            detail[name] = value if isinstance(value, int | float | str) else repr(value)
    return ErrorResponse(error=exc.message, code=exc.code, detail=detail or None)


def run(argv: list[str] | None = None) -> int:
    args = create_parser().parse_args(argv)
    if args.log_level:
        setup_logger(args.log_level.upper())

    with LogContext(stage=args.command):
        try:
            text = args.handler(args)
        except AppException as exc:
            logger.error(f"Command failed | command={args.command}, code={exc.code}, error={exc.message}")
            sys.stderr.write(error_response(exc).model_dump_json(exclude_none=True) + "\n")
            return _ERROR_EXIT
    write_text(text, getattr(args, "out", None))
    return 0
