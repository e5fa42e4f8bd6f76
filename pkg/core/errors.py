"""Exception hierarchy shared by the matcher, the generators and the CLI."""

from __future__ import annotations


class KMismatchError(Exception):
    """Base class for every error raised by this package."""


class LengthMismatchError(KMismatchError, ValueError):
    """Two strings that must have equal length do not."""


class InvalidParameterError(KMismatchError, ValueError):
    """A stride, residue, alignment, budget or dimension is out of range."""


class PrecisionError(KMismatchError, ArithmeticError):
    """A floating-point correlation produced counts too far from integers."""

    def __init__(self, message: str, worst_deviation: float) -> None:
        super().__init__(message)
        self.worst_deviation = worst_deviation


class InstanceFormatError(KMismatchError, ValueError):
    """An instance file could not be parsed."""
