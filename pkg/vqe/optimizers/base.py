"""Objective wrapper, iteration trace and result types shared by the optimizers."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from vqe.clients.base import ExpectationEstimate
from vqe.core.errors import ConfigurationError, NumericalError

logger = logging.getLogger(__name__)


class OptimizerKind(str, Enum):
    SPSA = "spsa"
    NELDER_MEAD = "nelder_mead"
    BFGS = "bfgs"


class ObjectiveDimensionError(ConfigurationError):
    """Raised when a parameter vector does not match the objective's arity."""


class NonFiniteObjectiveError(NumericalError):
    """Raised when the objective returns NaN or infinity.

    ``partial_result`` holds the optimizer state reached before the failure
    once the optimizer has attached it.
    """

    def __init__(self, message: str, *, stage: str | None = None) -> None:
        super().__init__(message, stage=stage)
        self.partial_result: OptResult | None = None


@dataclass(slots=True, eq=False)
class IterationRecord:
    nfev: int
    parameters: np.ndarray
    energy: float
    stddev: float


@dataclass(slots=True, eq=False)
class OptResult:
    best_parameters: np.ndarray
    best_value: float
    n_evaluations: int
    trace: list[IterationRecord] = field(default_factory=list)
    n_iterations: int = 0
    converged: bool = False
    stalled: bool = False


Callback = Callable[[IterationRecord], None]


class Objective:
    """Counts evaluations, checks arity and reports every call to ``callback``."""

    def __init__(
        self,
        function: Callable[[np.ndarray], ExpectationEstimate],
        arity: int,
        callback: Callback | None = None,
    ) -> None:
        if arity < 1:
            raise ConfigurationError(f"objective arity must be at least 1, got {arity}")
        self._function = function
        self._arity = arity
        self._callback = callback
        self._nfev = 0

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def nfev(self) -> int:
        return self._nfev

    def evaluate(self, parameters: Sequence[float] | np.ndarray) -> ExpectationEstimate:
        x = np.array(parameters, dtype=float).reshape(-1)
        if x.size != self._arity:
            raise ObjectiveDimensionError(
                f"objective takes {self._arity} parameters, got {x.size}"
            )
        self._nfev += 1
        estimate = self._function(x)
        logger.debug("Evaluation %d: energy=%.12g stddev=%.3g", self._nfev, estimate.value, estimate.stddev)
        if self._callback is not None:
            self._callback(IterationRecord(self._nfev, x.copy(), estimate.value, estimate.stddev))
        if not math.isfinite(estimate.value):
            raise NonFiniteObjectiveError(
                f"objective returned {estimate.value} at evaluation {self._nfev}"
            )
        return estimate

    def __call__(self, parameters: Sequence[float] | np.ndarray) -> float:
        return self.evaluate(parameters).value


class TraceRecorder:
    """Optimizer-side trace that also tracks the best point seen."""

    def __init__(self, objective: Objective) -> None:
        self._objective = objective
        self.trace: list[IterationRecord] = []
        self.best_parameters: np.ndarray | None = None
        self.best_value = math.inf
        self._best_record: IterationRecord | None = None

    def evaluate(self, x: np.ndarray) -> ExpectationEstimate:
        """Evaluate and remember the point if it is the best so far."""
        estimate = self._objective.evaluate(x)
        if estimate.value < self.best_value:
            self.best_value = estimate.value
            self.best_parameters = np.array(x, dtype=float)
            self._best_record = IterationRecord(
                self._objective.nfev, self.best_parameters.copy(), estimate.value, estimate.stddev
            )
        return estimate

    def record(self, nfev: int, x: np.ndarray, estimate_value: float, stddev: float = 0.0) -> None:
        if self.trace and self.trace[-1].nfev >= nfev:
            return
        self.trace.append(IterationRecord(nfev, np.array(x, dtype=float), estimate_value, stddev))

    def include_best(self) -> None:
        """Make sure the best point appears in the trace, keeping nfev order."""
        best = self._best_record
        if best is None or any(r.nfev == best.nfev for r in self.trace):
            return
        self.trace.append(best)
        self.trace.sort(key=lambda r: r.nfev)

    def result(self, *, n_iterations: int, converged: bool = False, stalled: bool = False) -> OptResult:
        if self.best_parameters is None:
            raise NumericalError("optimizer finished without a single finite evaluation")
        self.include_best()
        return OptResult(
            best_parameters=self.best_parameters.copy(),
            best_value=self.best_value,
            n_evaluations=self._objective.nfev,
            trace=list(self.trace),
            n_iterations=n_iterations,
            converged=converged,
            stalled=stalled,
        )

    def partial(self, n_iterations: int) -> OptResult | None:
        if self.best_parameters is None:
            return None
        return self.result(n_iterations=n_iterations)


def check_start(objective: Objective, x0: Sequence[float] | np.ndarray, max_iter: int) -> np.ndarray:
    x = np.array(x0, dtype=float).reshape(-1)
    if x.size != objective.arity:
        raise ObjectiveDimensionError(
            f"initial point has {x.size} entries, objective takes {objective.arity}"
        )
    if max_iter < 0:
        raise ConfigurationError(f"max_iter must be non-negative, got {max_iter}")
    return x


__all__ = [
    "Callback",
    "IterationRecord",
    "NonFiniteObjectiveError",
    "Objective",
    "ObjectiveDimensionError",
    "OptResult",
    "OptimizerKind",
    "TraceRecorder",
    "check_start",
]
