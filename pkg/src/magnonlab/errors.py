"""Exception types shared across the package."""

from __future__ import annotations


class SizeCapError(ValueError):
    """Requested system exceeds the configured dense-amplitude size cap."""


class ConsistencyError(RuntimeError):
    """Two independent computation routes disagreed beyond tolerance."""


class ConvergenceError(RuntimeError):
    """Iterative eigensolver failed to reach the requested residual."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual
