"""Shared exception types."""

from __future__ import annotations


class CsgamesError(Exception):
    """Base class for errors raised by this package."""


class ResourceLimitError(CsgamesError):
    """A configured resource limit (size, time, constraint count) was hit.

    This is a refusal to attempt something too large, never a wrong answer.
    """


class UnboundedVariableError(CsgamesError):
    """A lattice search was asked to run on a variable without finite bounds."""

    def __init__(self, name: str):
        super().__init__(f"variable {name!r} has no finite derived bounds")
        self.name = name


class FitError(CsgamesError):
    """Quasi-polynomial fitting failed (bad sample set or model class too small)."""
