"""Shared exception types."""

from __future__ import annotations


class ParseError(ValueError):
    """A structure file does not conform to its format."""


class PreconditionError(ValueError):
    """An operation was applied to a structure outside its domain.

    Carries the witness that disqualified the input, when one exists.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundExceeded(ValueError):
    """A requested enumeration or search is above the configured size bound."""
