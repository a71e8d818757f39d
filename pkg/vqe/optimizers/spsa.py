"""Simultaneous-perturbation stochastic approximation."""

from __future__ import annotations

import logging
import math
from typing import Sequence

import numpy as np

from vqe.core.errors import ConfigurationError
from vqe.optimizers.base import (
    NonFiniteObjectiveError,
    Objective,
    OptResult,
    TraceRecorder,
    check_start,
)

logger = logging.getLogger(__name__)

DEFAULT_ALPHA = 0.602
DEFAULT_GAMMA = 0.101
CALIBRATION_SAMPLES = 25
# First-step magnitude targeted by the gain calibration.
TARGET_MAGNITUDE = 2.0 * math.pi / 10.0


def _rademacher(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.choice(np.array([-1.0, 1.0]), size=size)


def calibrate_gain(
    objective: Objective,
    x0: np.ndarray,
    c: float,
    alpha: float,
    stability: float,
    rng: np.random.Generator,
    samples: int = CALIBRATION_SAMPLES,
) -> float:
    """Pick ``a`` so the first update moves each parameter by about ``2 pi / 10``."""
    total = 0.0
    for _ in range(samples):
        delta = _rademacher(rng, x0.size)
        difference = objective(x0 + c * delta) - objective(x0 - c * delta)
        total += abs(difference / (2.0 * c))
    average = total / samples
    scale = TARGET_MAGNITUDE * (stability + 1.0) ** alpha
    if average == 0.0:
        return scale
    return scale / average


def spsa(
    objective: Objective,
    x0: Sequence[float] | np.ndarray,
    max_iter: int = 500,
    a: float | None = None,
    c: float = 0.2,
    alpha: float = DEFAULT_ALPHA,
    gamma: float = DEFAULT_GAMMA,
    A: float | None = None,
    save_steps: int = 100,
    seed: int | None = None,
) -> OptResult:
    """Run SPSA and return the lowest-energy iterate visited.

    Each iteration spends two perturbed evaluations on the gradient estimate and
    one on the new iterate. The trace keeps every ``save_steps``-th iterate,
    the final iterate and the best one.
    """
    if not c > 0.0:
        raise ConfigurationError(f"perturbation size c must be positive, got {c}")
    if save_steps < 1:
        raise ConfigurationError(f"save_steps must be at least 1, got {save_steps}")
    x = check_start(objective, x0, max_iter)
    rng = np.random.default_rng(seed)
    stability = 0.1 * max_iter if A is None else A
    recorder = TraceRecorder(objective)
    k = 0
    try:
        start = recorder.evaluate(x)
        if max_iter == 0:
            recorder.record(objective.nfev, x, start.value, start.stddev)
            return recorder.result(n_iterations=0)

        gain = a if a is not None else calibrate_gain(objective, x, c, alpha, stability, rng)
        logger.debug("SPSA gains: a=%.6g c=%.6g A=%.6g", gain, c, stability)

        last = (objective.nfev, x.copy(), start.value, start.stddev)
        for k in range(max_iter):
            a_k = gain / (k + 1 + stability) ** alpha
            c_k = c / (k + 1) ** gamma
            delta = _rademacher(rng, x.size)
            plus = objective(x + c_k * delta)
            minus = objective(x - c_k * delta)
            # 1 / delta == delta for +-1 entries.
            gradient = (plus - minus) / (2.0 * c_k) * delta
            x = x - a_k * gradient
            estimate = recorder.evaluate(x)
            last = (objective.nfev, x.copy(), estimate.value, estimate.stddev)
            if (k + 1) % save_steps == 0:
                recorder.record(*last)
        recorder.record(*last)
    except NonFiniteObjectiveError as exc:
        exc.partial_result = recorder.partial(k)
        raise

    logger.debug(
        "SPSA finished: iterations=%d nfev=%d best=%.12g", max_iter, objective.nfev, recorder.best_value
    )
    return recorder.result(n_iterations=max_iter)


__all__ = ["CALIBRATION_SAMPLES", "TARGET_MAGNITUDE", "calibrate_gain", "spsa"]
