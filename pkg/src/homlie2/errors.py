"""Exception types shared across the package."""

from __future__ import annotations


class HomLieError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HomLieError, ValueError):
    """Malformed input: shape mismatch, bad literal, unusable argument."""


class PreconditionError(HomLieError, RuntimeError):
    """A documented precondition of an operation does not hold.

    Carries the report that exposed the violation when one exists.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class CheckFailure(HomLieError, RuntimeError):
    """A validated construction produced data that fails its own axioms."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
