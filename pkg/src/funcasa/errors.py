"""Exception taxonomy.

Three failure classes map onto the CLI exit codes: usage (2), domain (3),
numeric (4). Numeric errors carry the best partial result so callers can
inspect how far a computation got before it was abandoned.
"""

from __future__ import annotations

from typing import Any


class FuncasaError(Exception):
    """Base class for all package errors."""


class UsageError(FuncasaError):
    """Malformed input: unparseable descriptors, bad flags, wrong types."""


class DomainError(FuncasaError):
    """Input violates a mathematical precondition.

    The message names the violated hypothesis so callers can act on it,
    for instance "the lifted body requires 1/s to be an integer".
    """


class NumericError(FuncasaError):
    """A computation failed to reach the requested accuracy.

    Attributes
    ----------
    partial : Any
        Best result obtained before giving up, or None.
    """

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial
