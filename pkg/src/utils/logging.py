"""
Structured logging for the HRS tilt engine.

structlog is layered over the standard logging module and writes to stderr,
so that reports printed on stdout stay machine readable. Call
``configure_logging`` again to switch level or rendering at runtime; it runs
once at import with the values from the environment.
"""

import functools
import logging
import os
import sys
import time
from typing import Any, Dict, List, Optional

import structlog
from dotenv import load_dotenv

load_dotenv()

APPLICATION = "hrs_tilt_engine"


def stringify_domain_values(_, __, event_dict: Dict[str, Any]) -> Dict[str, Any]:
    """Render engine objects (groups, heart objects, modules) by their text form."""
    for key, value in event_dict.items():
        if type(value).__module__.startswith("src."):
            event_dict[key] = str(value)
    return event_dict


def _processors(fmt: str) -> List[Any]:
    processors: List[Any] = [
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.add_log_level,
        structlog.stdlib.add_logger_name,
        stringify_domain_values,
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
    ]
    if fmt == "json":
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty(), sort_keys=True))
    return processors


def configure_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """
    Configure structlog and the root logger.

    Args:
        level: Level name, defaults to LOG_LEVEL
        fmt: ``console`` or ``json``, defaults to LOG_FORMAT
    """
    level = (level or os.getenv("LOG_LEVEL", "INFO")).upper()
    fmt = (fmt or os.getenv("LOG_FORMAT", "console")).lower()
    structlog.configure(
        processors=_processors(fmt),
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    logging.basicConfig(format="%(message)s", stream=sys.stderr)
    set_log_level(level)


def set_log_level(level: str) -> None:
    """Change the root threshold; unknown names fall back to INFO."""
    logging.getLogger().setLevel(getattr(logging, level.upper(), logging.INFO))


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """
    Get a structured logger bound to the application and environment.

    Args:
        name: Usually ``__name__`` of the calling module
    """
    return structlog.get_logger(name).bind(
        application=APPLICATION,
        environment=os.getenv("ENVIRONMENT", "development"),
    )


class ExecutionTimer:
    """
    Log how long a block or function takes.

    Works as a context manager and as a decorator. Durations only ever go to
    the log, never into reports.
    """

    def __init__(self, name: str, logger: Optional[structlog.stdlib.BoundLogger] = None):
        self.name = name
        self.logger = logger or get_logger("timer")
        self.start_time: Optional[float] = None
        self.duration: Optional[float] = None

    def __enter__(self):
        self.start_time = time.perf_counter()
        self.logger.debug(f"Started {self.name}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.duration = time.perf_counter() - self.start_time
        timing = {
            "execution_time_seconds": round(self.duration, 3),
            "execution_time_ms": round(self.duration * 1000, 1),
        }
        if exc_type is not None:
            self.logger.warning(f"Aborted {self.name}", error=exc_type.__name__, **timing)
        else:
            self.logger.info(f"Completed {self.name}", **timing)

    def __call__(self, func):
        @functools.wraps(func)
        def wrapped(*args, **kwargs):
            with self:
                return func(*args, **kwargs)

        return wrapped


configure_logging()
