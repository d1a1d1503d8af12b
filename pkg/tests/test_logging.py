"""
Tests for the logging configuration.

This module contains tests for the logging utilities to ensure they work as expected.
"""

import logging
import time
from unittest.mock import MagicMock

import pytest
import structlog

from src.abgrp.groups import FgAbGroup
from src.utils.logging import ExecutionTimer, get_logger, set_log_level, stringify_domain_values


def test_get_logger():
    """Test that get_logger returns a properly configured logger."""
    logger = get_logger("test_logger")

    # Check that the logger has the expected bound values
    assert logger._context.get("application") == "hrs_tilt_engine"
    assert "environment" in logger._context


def test_get_logger_is_structlog():
    """get_logger returns a structlog proxy that can bind more context."""
    logger = get_logger("test_logger").bind(verb="snf")
    assert logger._context.get("verb") == "snf"
    assert isinstance(structlog.get_config()["processors"], list)


def test_execution_timer_context_manager():
    """Test that ExecutionTimer works as a context manager."""
    mock_logger = MagicMock()

    with ExecutionTimer("test_operation", mock_logger) as timer:
        time.sleep(0.01)  # Small delay to ensure measurable time

    # Check that the logger was called for both start and end
    assert mock_logger.debug.call_count == 1
    assert mock_logger.info.call_count == 1

    completion_call = mock_logger.info.call_args[0][0]
    assert "Completed test_operation" in completion_call

    kwargs = mock_logger.info.call_args[1]
    assert kwargs["execution_time_seconds"] >= 0
    assert kwargs["execution_time_ms"] > 0
    assert timer.duration > 0


def test_execution_timer_decorator():
    """Test that ExecutionTimer works as a decorator."""
    mock_logger = MagicMock()

    @ExecutionTimer("decorated_operation", mock_logger)
    def sample_function():
        time.sleep(0.01)  # Small delay
        return "result"

    result = sample_function()

    # Check the function still returns correctly
    assert result == "result"
    assert mock_logger.debug.call_count == 1
    assert mock_logger.info.call_count == 1


def test_set_log_level():
    """set_log_level changes the root threshold and tolerates unknown names."""
    root = logging.getLogger()
    previous = root.level
    try:
        set_log_level("warning")
        assert root.level == logging.WARNING
        set_log_level("nonsense")
        assert root.level == logging.INFO
    finally:
        root.setLevel(previous)


def test_execution_timer_logs_aborts():
    """A block that raises is logged as aborted with the error type."""
    mock_logger = MagicMock()

    with pytest.raises(ValueError):
        with ExecutionTimer("failing_operation", mock_logger):
            raise ValueError("boom")

    mock_logger.info.assert_not_called()
    assert mock_logger.warning.call_args[1]["error"] == "ValueError"


def test_stringify_domain_values():
    """Engine objects are rendered by their text form, other values are untouched."""
    event = {"group": FgAbGroup(1, (2, 12)), "count": 3, "event": "computed"}
    rendered = stringify_domain_values(None, "info", event)
    assert rendered == {"group": "Z + Z/2 + Z/12", "count": 3, "event": "computed"}
