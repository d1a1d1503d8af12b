"""
Utilities package for the HRS tilt engine.

This package contains the logging, error and schema modules used throughout
the application.
"""

from src.utils.logging import get_logger, ExecutionTimer, set_log_level

__all__ = ["get_logger", "ExecutionTimer", "set_log_level"]
