"""
Error types for the HRS tilt engine.

Every error raised by the engine derives from HrsTiltError and carries the
process exit status the command-line frontend reports for it.
"""

from typing import Optional

# Exit statuses
EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE_BOUND = 4


class HrsTiltError(Exception):
    """Base class for all engine errors."""

    exit_code = EXIT_CHECK_FAILURE

    def __init__(self, message: str, *, field: Optional[str] = None):
        """
        Initialize the error.

        Args:
            message: Human readable description
            field: Optional name of the offending input field
        """
        super().__init__(message)
        self.message = message
        self.field = field

    def to_dict(self):
        """Serialize the error for report payloads."""
        payload = {"error": type(self).__name__, "message": self.message}
        if self.field:
            payload["field"] = self.field
        return payload


class FixtureParseError(HrsTiltError):
    """Raised when an input file or literal cannot be parsed at all."""

    exit_code = EXIT_USAGE


class InputValidationError(HrsTiltError):
    """Raised when parsed input violates a documented invariant."""

    exit_code = EXIT_VALIDATION


class EndpointMismatchError(InputValidationError):
    """Raised when morphisms or extension classes do not chain."""


class PrimeMismatchError(InputValidationError):
    """Raised when objects over different prime sets or primes are combined."""


class ClassMembershipError(InputValidationError):
    """Raised when a group lies outside the torsion or torsion-free class it must belong to."""


class InfiniteGroupError(InputValidationError):
    """Raised when an operation that enumerates elements receives an infinite group."""


class BoundExceededError(HrsTiltError):
    """Raised when a brute-force computation would exceed its configured bound."""

    exit_code = EXIT_RESOURCE_BOUND

    def __init__(self, message: str, *, bound: int, requested: int):
        super().__init__(message)
        self.bound = bound
        self.requested = requested

    def to_dict(self):
        payload = super().to_dict()
        payload.update({"bound": self.bound, "requested": self.requested})
        return payload


class InvariantBreachError(HrsTiltError):
    """Raised when a post-condition that holds by construction fails."""

    exit_code = EXIT_CHECK_FAILURE


def exit_code_for(exc: BaseException) -> int:
    """
    Map an exception to the process exit status.

    Args:
        exc: The exception that stopped a command

    Returns:
        The exit status to report
    """
    if isinstance(exc, HrsTiltError):
        return exc.exit_code
    return EXIT_CHECK_FAILURE
