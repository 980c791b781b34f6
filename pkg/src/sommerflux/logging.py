"""Logging utilities."""

from __future__ import annotations

import contextlib
import contextvars
import logging
from collections.abc import Iterator

from rich.console import Console
from rich.logging import RichHandler

_command_var: contextvars.ContextVar[str] = contextvars.ContextVar(
    "sommerflux_command", default="-"
)
_stage_var: contextvars.ContextVar[str] = contextvars.ContextVar("sommerflux_stage", default="-")


class _ContextFilter(logging.Filter):
    """Inject command context into log records."""

    def filter(self, record: logging.LogRecord) -> bool:  # noqa: A003
        record.command = _command_var.get()  # type: ignore[attr-defined]
        record.stage = _stage_var.get()  # type: ignore[attr-defined]
        return True


@contextlib.contextmanager
def run_context(*, command: str, stage: str | None = None) -> Iterator[None]:
    """Temporarily bind command context for structured logging.

    Args:
        command: CLI command or library entry point being executed.
        stage: Optional stage (e.g. a verification suite name).
    """

    token_command = _command_var.set(command)
    token_stage = _stage_var.set(stage or _stage_var.get())
    try:
        yield
    finally:
        _command_var.reset(token_command)
        _stage_var.reset(token_stage)


def set_stage(stage: str) -> None:
    """Update current stage in context."""

    _stage_var.set(stage)


def configure_logging(level: str = "WARNING") -> None:
    """Configure application logging.

    Args:
        level: Logging level name.
    """

    # stdout carries rendered reports; logs go to stderr
    handler = RichHandler(
        console=Console(stderr=True), rich_tracebacks=True, show_time=True, show_level=True
    )
    handler.addFilter(_ContextFilter())

    formatter = logging.Formatter(
        fmt="%(asctime)s %(levelname)s command=%(command)s stage=%(stage)s %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    handler.setFormatter(formatter)

    root = logging.getLogger()
    root.setLevel(level.upper())
    # configure_logging may run once per CLI invocation inside one process (tests)
    for existing in [h for h in root.handlers if isinstance(h, RichHandler)]:
        root.removeHandler(existing)
    root.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    """Get a module logger."""

    return logging.getLogger(name)

