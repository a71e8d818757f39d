"""Derivative-free downhill simplex; fills the COBYLA slot of the optimizer menu."""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from vqe.optimizers.base import (
    NonFiniteObjectiveError,
    Objective,
    OptResult,
    TraceRecorder,
    check_start,
)

logger = logging.getLogger(__name__)

REFLECTION = 1.0
EXPANSION = 2.0
CONTRACTION = 0.5
SHRINK = 0.5


def nelder_mead(
    objective: Objective,
    x0: Sequence[float] | np.ndarray,
    max_iter: int = 500,
    xtol: float = 1e-8,
    ftol: float = 1e-11,
    *,
    initial_step: float = 0.1,
) -> OptResult:
    """Minimize with reflection, expansion, contraction and shrink steps.

    Stops once both the simplex diameter (max distance to the best vertex,
    infinity norm) and the spread of vertex values drop under the tolerances.
    The trace holds the best vertex of every iteration.
    """
    x = check_start(objective, x0, max_iter)
    recorder = TraceRecorder(objective)
    n = x.size
    iteration = 0
    converged = False
    try:
        f0 = recorder.evaluate(x)
        if max_iter == 0:
            recorder.record(objective.nfev, x, f0.value, f0.stddev)
            return recorder.result(n_iterations=0)

        simplex = [x.copy()]
        values = [f0.value]
        for i in range(n):
            vertex = x.copy()
            vertex[i] += initial_step
            simplex.append(vertex)
            values.append(recorder.evaluate(vertex).value)
        simplex_arr = np.array(simplex)
        values_arr = np.array(values)

        def evaluate(point: np.ndarray) -> float:
            return recorder.evaluate(point).value

        for iteration in range(1, max_iter + 1):
            order = np.argsort(values_arr, kind="stable")
            simplex_arr, values_arr = simplex_arr[order], values_arr[order]
            recorder.record(objective.nfev, simplex_arr[0], values_arr[0])

            spread_x = float(np.max(np.abs(simplex_arr[1:] - simplex_arr[0])))
            spread_f = float(np.max(np.abs(values_arr[1:] - values_arr[0])))
            if spread_x <= xtol and spread_f <= ftol:
                converged = True
                break

            centroid = simplex_arr[:-1].mean(axis=0)
            worst, f_worst = simplex_arr[-1], values_arr[-1]
            reflected = centroid + REFLECTION * (centroid - worst)
            f_reflected = evaluate(reflected)

            if f_reflected < values_arr[0]:
                expanded = centroid + EXPANSION * (reflected - centroid)
                f_expanded = evaluate(expanded)
                if f_expanded < f_reflected:
                    simplex_arr[-1], values_arr[-1] = expanded, f_expanded
                else:
                    simplex_arr[-1], values_arr[-1] = reflected, f_reflected
                continue
            if f_reflected < values_arr[-2]:
                simplex_arr[-1], values_arr[-1] = reflected, f_reflected
                continue

            if f_reflected < f_worst:
                contracted = centroid + CONTRACTION * (reflected - centroid)
                f_contracted = evaluate(contracted)
                accept = f_contracted <= f_reflected
            else:
                contracted = centroid + CONTRACTION * (worst - centroid)
                f_contracted = evaluate(contracted)
                accept = f_contracted < f_worst
            if accept:
                simplex_arr[-1], values_arr[-1] = contracted, f_contracted
                continue

            best = simplex_arr[0].copy()
            for i in range(1, n + 1):
                simplex_arr[i] = best + SHRINK * (simplex_arr[i] - best)
                values_arr[i] = evaluate(simplex_arr[i])
        else:
            order = np.argsort(values_arr, kind="stable")
            recorder.record(objective.nfev, simplex_arr[order[0]], values_arr[order[0]])
    except NonFiniteObjectiveError as exc:
        exc.partial_result = recorder.partial(iteration)
        raise

    logger.debug(
        "Nelder-Mead finished: iterations=%d nfev=%d converged=%s best=%.12g",
        iteration,
        objective.nfev,
        converged,
        recorder.best_value,
    )
    return recorder.result(n_iterations=iteration, converged=converged)


__all__ = ["nelder_mead"]
