"""Quasi-Newton BFGS on central finite differences with Armijo backtracking."""

from __future__ import annotations

import logging
import math
from typing import Sequence

import numpy as np

from vqe.clients.base import ExpectationEstimate
from vqe.core.errors import ConfigurationError
from vqe.optimizers.base import (
    NonFiniteObjectiveError,
    Objective,
    OptResult,
    TraceRecorder,
    check_start,
)

logger = logging.getLogger(__name__)

ARMIJO_C1 = 1e-4
MAX_HALVINGS = 40
# Bounds on an interpolated backtrack, as fractions of the rejected step.
BACKTRACK_BOUNDS = (0.1, 0.5)
# Bounds on the interpolated refinement of an accepted step.
REFINE_BOUNDS = (0.1, 10.0)


def central_difference_gradient(
    objective: Objective,
    x: np.ndarray,
    fd_step: float,
) -> np.ndarray:
    """Gradient from ``(f(x + h e_i) - f(x - h e_i)) / 2h``; costs ``2n`` evaluations."""
    gradient = np.empty_like(x)
    for i in range(x.size):
        forward = x.copy()
        backward = x.copy()
        forward[i] += fd_step
        backward[i] -= fd_step
        gradient[i] = (objective(forward) - objective(backward)) / (2.0 * fd_step)
    return gradient


def interpolated_step(f0: float, slope: float, step: float, f_step: float) -> float | None:
    """Minimizer of the parabola through ``f(0)``, ``f'(0)`` and ``f(step)``.

    Returns ``None`` when the parabola has no positive curvature.
    """
    curvature = f_step - f0 - slope * step
    if not curvature > 0.0:
        return None
    return -slope * step * step / (2.0 * curvature)


def _line_search(
    recorder: TraceRecorder,
    x: np.ndarray,
    f: float,
    direction: np.ndarray,
    slope: float,
) -> tuple[float, ExpectationEstimate] | None:
    """Backtrack from the unit step until the Armijo condition holds.

    Each rejected step is replaced by the parabola minimizer clamped to
    ``BACKTRACK_BOUNDS``, so the step at least halves. The accepted step is
    then refined once by the same interpolation, which makes the search exact
    on quadratics. Returns ``None`` after ``MAX_HALVINGS`` rejected steps.
    """
    step = 1.0
    for _ in range(MAX_HALVINGS + 1):
        trial = recorder.evaluate(x + step * direction)
        if trial.value <= f + ARMIJO_C1 * step * slope:
            break
        low, high = BACKTRACK_BOUNDS
        guess = interpolated_step(f, slope, step, trial.value)
        step = step * high if guess is None else min(max(guess, low * step), high * step)
    else:
        return None

    guess = interpolated_step(f, slope, step, trial.value)
    if guess is None or math.isclose(guess, step, rel_tol=1e-12):
        return step, trial
    low, high = REFINE_BOUNDS
    refined_step = min(max(guess, low * step), high * step)
    refined = recorder.evaluate(x + refined_step * direction)
    if refined.value < trial.value and refined.value <= f + ARMIJO_C1 * refined_step * slope:
        return refined_step, refined
    return step, trial


def bfgs_fd(
    objective: Objective,
    x0: Sequence[float] | np.ndarray,
    max_iter: int = 500,
    gtol: float = 1e-8,
    fd_step: float = 1e-6,
) -> OptResult:
    """Minimize with an inverse-Hessian BFGS update.

    The initial inverse Hessian is the identity, rescaled by ``y.s / y.y``
    before the first update. The trace holds every accepted iterate. A line
    search that still fails the sufficient-decrease test after
    ``MAX_HALVINGS`` backtracks ends the run with ``stalled`` set.
    """
    if not fd_step > 0.0:
        raise ConfigurationError(f"fd_step must be positive, got {fd_step}")
    x = check_start(objective, x0, max_iter)
    recorder = TraceRecorder(objective)
    iteration = 0
    converged = stalled = False
    try:
        current = recorder.evaluate(x)
        f = current.value
        recorder.record(objective.nfev, x, f, current.stddev)
        if max_iter == 0:
            return recorder.result(n_iterations=0)

        n = x.size
        identity = np.eye(n)
        inverse_hessian = identity.copy()
        scaled = False
        gradient = central_difference_gradient(objective, x, fd_step)
        for iteration in range(1, max_iter + 1):
            if float(np.max(np.abs(gradient))) < gtol:
                converged = True
                iteration -= 1
                break

            direction = -inverse_hessian @ gradient
            slope = float(gradient @ direction)
            if slope >= 0.0:
                inverse_hessian = identity.copy()
                scaled = False
                direction = -gradient
                slope = float(gradient @ direction)

            accepted = _line_search(recorder, x, f, direction, slope)
            if accepted is None:
                stalled = True
                break
            step, trial = accepted

            s = step * direction
            x, f = x + s, trial.value
            recorder.record(objective.nfev, x, f, trial.stddev)
            new_gradient = central_difference_gradient(objective, x, fd_step)
            y = new_gradient - gradient
            gradient = new_gradient
            sy = float(s @ y)
            if sy > 0.0:
                if not scaled:
                    inverse_hessian = (sy / float(y @ y)) * identity
                    scaled = True
                rho = 1.0 / sy
                left = identity - rho * np.outer(s, y)
                inverse_hessian = left @ inverse_hessian @ left.T + rho * np.outer(s, s)
    except NonFiniteObjectiveError as exc:
        exc.partial_result = recorder.partial(iteration)
        raise

    if stalled:
        logger.warning("BFGS line search stalled at iteration %d (nfev=%d)", iteration, objective.nfev)
    logger.debug(
        "BFGS finished: iterations=%d nfev=%d converged=%s best=%.12g",
        iteration,
        objective.nfev,
        converged,
        recorder.best_value,
    )
    return recorder.result(n_iterations=iteration, converged=converged, stalled=stalled)


__all__ = [
    "ARMIJO_C1",
    "MAX_HALVINGS",
    "bfgs_fd",
    "central_difference_gradient",
    "interpolated_step",
]
