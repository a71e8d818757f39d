"""
Exception hierarchy for the VQE engine.

Every domain error derives from :class:`VqeError` and belongs to one of two
categories the CLI maps to exit codes: configuration problems (bad input,
unsupported requests) and numerical failures (non-convergence, singular data).
"""

from __future__ import annotations


class VqeError(Exception):
    """Base class for all engine errors; ``stage`` names the pipeline step."""

    def __init__(self, message: str, *, stage: str | None = None) -> None:
        super().__init__(message)
        self.stage = stage

    def __str__(self) -> str:
        message = super().__str__()
        if self.stage:
            return f"[{self.stage}] {message}"
        return message


class ConfigurationError(VqeError, ValueError):
    """Raised when a request is malformed or asks for something unsupported."""


class NumericalError(VqeError, ArithmeticError):
    """Raised when a computation fails to converge or meets singular data."""


__all__ = ["ConfigurationError", "NumericalError", "VqeError"]
