"""
Logging configuration for the grstrat command line.

Library modules only call logging.getLogger(__name__); handlers are attached
here, once per process, by the CLI entry point.
"""

import logging
import os
import sys
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Optional

import colorlog

LOG_DIR_ENV = "GRSTRAT_LOG_DIR"


class LogLevel(Enum):
    """Available log levels."""

    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR
    CRITICAL = logging.CRITICAL


# Store the current log file path and console handler
_current_log_file: Optional[str] = None
_console_handler: Optional[logging.Handler] = None


def get_current_log_file() -> Optional[str]:
    """Get the path to the current log file."""
    return _current_log_file


def _configure_external_loggers() -> None:
    """Reduce verbosity of external libraries."""
    external_loggers = {
        "graphviz": logging.WARNING,
        "sympy": logging.WARNING,
        "asyncio": logging.WARNING,
    }
    for logger_name, level in external_loggers.items():
        logging.getLogger(logger_name).setLevel(level)


def _log_dir() -> Path:
    """GRSTRAT_LOG_DIR, else /var/log/grstrat, else ~/.grstrat/logs."""
    override = os.getenv(LOG_DIR_ENV)
    if override:
        log_dir = Path(override).expanduser()
        log_dir.mkdir(parents=True, exist_ok=True)
        return log_dir

    log_dir = Path("/var/log/grstrat")
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
    except PermissionError:
        log_dir = Path.home() / ".grstrat" / "logs"
        log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir


def set_console_level(level: LogLevel) -> None:
    """Change what reaches the terminal; the log file keeps INFO and above."""
    if _console_handler is None:
        return
    _console_handler.setLevel(level.value)
    root = logging.getLogger()
    if root.level > level.value:
        root.setLevel(level.value)


def get_grstrat_logger(command_name: Optional[str] = None) -> tuple[logging.Logger, str]:
    """
    Configure colorful console logging and a timestamped log file.

    Args:
        command_name: Subcommand used as the log file prefix (default: grstrat)

    Returns:
        Tuple of (root logger, log file path)
    """
    global _current_log_file, _console_handler

    console_handler = colorlog.StreamHandler(sys.stderr)
    console_handler.setFormatter(
        colorlog.ColoredFormatter(
            "%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt=None,
            reset=True,
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "red,bg_white",
            },
            secondary_log_colors={},
            style="%",
        )
    )
    console_handler.setLevel(logging.WARNING)  # Only show warnings and above in console

    prefix = (command_name or "grstrat").replace("-", "_")
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    log_file = _log_dir() / f"{prefix}_{timestamp}.log"

    file_handler = logging.FileHandler(log_file, encoding="utf-8")
    file_handler.setLevel(logging.INFO)  # Capture INFO level and above to file
    file_handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))

    logger = logging.getLogger()
    logger.setLevel(logging.INFO)
    for handler in logger.handlers:
        handler.close()
    logger.handlers.clear()  # Clear any existing handlers
    logger.addHandler(console_handler)
    logger.addHandler(file_handler)
    _configure_external_loggers()

    _console_handler = console_handler
    _current_log_file = str(log_file)

    return logger, str(log_file)
