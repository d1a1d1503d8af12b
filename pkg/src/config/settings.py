# src/config/settings.py
"""
Central settings configuration for the HRS tilt engine.

This module loads environment variables and provides centralized access
to the bounds, seeds and sample sizes used throughout the application.
"""

import os
from typing import List

from dotenv import load_dotenv
from sympy import isprime

# Load environment variables from .env file (in development)
load_dotenv()

# Integer variables that could not be parsed; reported by validate_config
_UNPARSED: List[str] = []


def _int_setting(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        _UNPARSED.append(f"{name} must be an integer, got {raw!r}")
        return default


# Application Settings
LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")
LOG_FORMAT = os.environ.get("LOG_FORMAT", "console")
ENVIRONMENT = os.environ.get("ENVIRONMENT", "development")

# Resource bounds
BRUTE_FORCE_ORDER_BOUND = _int_setting("BRUTE_FORCE_ORDER_BOUND", 10000)
ENUMERATION_VERTEX_BOUND = _int_setting("ENUMERATION_VERTEX_BOUND", 20)

# Example ring truncation
TRUNCATION_BOUND = _int_setting("TRUNCATION_BOUND", 4)
STABILITY_BOUND = _int_setting("STABILITY_BOUND", 3)
EXAMPLE_PRIME = _int_setting("EXAMPLE_PRIME", 2)

# Randomized suites
DEFAULT_SEED = _int_setting("DEFAULT_SEED", 1729)
TORSION_SAMPLE_SIZE = _int_setting("TORSION_SAMPLE_SIZE", 200)
HEART_SAMPLE_SIZE = _int_setting("HEART_SAMPLE_SIZE", 100)
FUNCTOR_LAW_SAMPLES = _int_setting("FUNCTOR_LAW_SAMPLES", 100)

# Schemas
REPORT_SCHEMA_VERSION = _int_setting("REPORT_SCHEMA_VERSION", 1)
FIXTURE_SCHEMA_VERSION = _int_setting("FIXTURE_SCHEMA_VERSION", 1)

TOOL_VERSION = "1.0.0"


def validate_config() -> List[str]:
    """
    Validate the configured bounds and parameters.

    Returns:
        List of configuration problems (empty when the configuration is usable)
    """
    problems = list(_UNPARSED)

    positive = {
        "BRUTE_FORCE_ORDER_BOUND": BRUTE_FORCE_ORDER_BOUND,
        "ENUMERATION_VERTEX_BOUND": ENUMERATION_VERTEX_BOUND,
        "TORSION_SAMPLE_SIZE": TORSION_SAMPLE_SIZE,
        "HEART_SAMPLE_SIZE": HEART_SAMPLE_SIZE,
        "FUNCTOR_LAW_SAMPLES": FUNCTOR_LAW_SAMPLES,
    }
    for name, value in positive.items():
        if value <= 0:
            problems.append(f"{name} must be positive, got {value}")

    if TRUNCATION_BOUND < 0 or STABILITY_BOUND < 0:
        problems.append("Truncation bounds must be non-negative")

    if not isprime(EXAMPLE_PRIME):
        problems.append(f"EXAMPLE_PRIME must be prime, got {EXAMPLE_PRIME}")

    if LOG_FORMAT.lower() not in ("console", "json"):
        problems.append(f"LOG_FORMAT must be 'console' or 'json', got {LOG_FORMAT}")

    return problems
