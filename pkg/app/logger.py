"""
Logging configuration module.

Every module logger hangs below the package logger ``bessel_struve``, which
owns a single stderr handler. stdout is reserved for CSV and JSON payloads.
"""

import logging
import sys
from typing import Optional

from app.config import get_config

ROOT_LOGGER = 'bessel_struve'


class StderrHandler(logging.StreamHandler):
    """Stream handler that resolves sys.stderr at emit time, so redirections are honoured."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def setup_logger(level: Optional[str] = None, format_string: Optional[str] = None) -> logging.Logger:
    """
    Configure the package logger once.

    Args:
        level: Log level name; defaults to LOG_LEVEL
        format_string: Record format; defaults to LOG_FORMAT

    Returns:
        The package logger
    """
    config = get_config()
    root = logging.getLogger(ROOT_LOGGER)
    if not root.handlers:
        handler = StderrHandler()
        handler.setFormatter(logging.Formatter(format_string or config.LOG_FORMAT))
        root.addHandler(handler)
        root.propagate = False
        set_level(level or config.LOG_LEVEL)
    return root


def get_logger(name: str) -> logging.Logger:
    """
    Logger for a module, a child of the package logger.

    Args:
        name: Module name, typically __name__
    """
    setup_logger()
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def set_level(level: str) -> None:
    """Set the threshold of the package logger; unknown names fall back to WARNING."""
    logging.getLogger(ROOT_LOGGER).setLevel(getattr(logging, str(level).upper(), logging.WARNING))


class LoggerAdapter(logging.LoggerAdapter):
    """
    Logger adapter that prefixes messages with context.

    Example:
        logger = LoggerAdapter(get_logger(__name__), {'suite': 'kernel'})
        logger.info("Running property")  # "[suite=kernel] Running property"
    """

    def process(self, msg, kwargs):
        extra = self.extra.copy()
        extra.update(kwargs.get('extra', {}))
        kwargs['extra'] = extra
        context_str = ' '.join(f'[{k}={v}]' for k, v in self.extra.items())
        if context_str:
            msg = f'{context_str} {msg}'
        return msg, kwargs


cli_logger = get_logger('cli')


def log_command(command: str, **kwargs):
    """Log a CLI command invocation with its sorted settings."""
    details = ' '.join(f'{k}={v}' for k, v in sorted(kwargs.items()))
    cli_logger.info(f"Command: {command} {details}".rstrip())


def log_outcome(command: str, exit_code: int):
    """Log a CLI command outcome; non-zero exits are warnings."""
    level = logging.INFO if exit_code == 0 else logging.WARNING
    cli_logger.log(level, f"Outcome: {command} -> exit {exit_code}")


def log_failure(command: str, error: BaseException, exit_code: int):
    """Log an error a command handler mapped to an exit code."""
    if exit_code == 1 and not hasattr(error, 'exit_code'):
        cli_logger.error(f"{command}: unexpected {type(error).__name__}: {error}", exc_info=error)
    else:
        cli_logger.warning(f"{command}: {type(error).__name__}: {error} (exit {exit_code})")
