"""
Configuration package for the HRS tilt engine.
"""

from src.config.settings import (
    LOG_LEVEL,
    LOG_FORMAT,
    ENVIRONMENT,
    BRUTE_FORCE_ORDER_BOUND,
    ENUMERATION_VERTEX_BOUND,
    TRUNCATION_BOUND,
    STABILITY_BOUND,
    EXAMPLE_PRIME,
    DEFAULT_SEED,
    TORSION_SAMPLE_SIZE,
    HEART_SAMPLE_SIZE,
    FUNCTOR_LAW_SAMPLES,
    REPORT_SCHEMA_VERSION,
    FIXTURE_SCHEMA_VERSION,
    TOOL_VERSION,
    validate_config,
)

__all__ = [
    # Logging
    "LOG_LEVEL",
    "LOG_FORMAT",
    "ENVIRONMENT",
    # Bounds
    "BRUTE_FORCE_ORDER_BOUND",
    "ENUMERATION_VERTEX_BOUND",
    "TRUNCATION_BOUND",
    "STABILITY_BOUND",
    "EXAMPLE_PRIME",
    # Sampling
    "DEFAULT_SEED",
    "TORSION_SAMPLE_SIZE",
    "HEART_SAMPLE_SIZE",
    "FUNCTOR_LAW_SAMPLES",
    # Schemas
    "REPORT_SCHEMA_VERSION",
    "FIXTURE_SCHEMA_VERSION",
    "TOOL_VERSION",
    "validate_config",
]
