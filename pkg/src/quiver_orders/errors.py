"""Shared exception types."""

from __future__ import annotations


class CapExceeded(RuntimeError):
    """An enumeration grew past its configured cap."""


class CalibrationError(RuntimeError):
    """No consistent convention assignment fits the computed evidence."""


class VerificationError(RuntimeError):
    """A cross-check that should hold by construction failed."""
