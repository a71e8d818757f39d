"""
Dissociation-curve scans over a list of inter-atomic distances.

Each distance runs the full single-point pipeline with its own seed derived
from the master seed and the point index. Failures are collected per point
and the scan carries on.
"""

from __future__ import annotations

import asyncio
import logging
import math
from typing import Sequence

import numpy as np

from vqe.core.config import AppSettings, get_settings
from vqe.core.errors import ConfigurationError, VqeError
from vqe.schemas.vqe import ScanFailure, ScanPoint, ScanResult, VqeConfig, VqeResult
from vqe.services.vqe_runner import execute_point
from vqe.utils.seeding import derive_seed

logger = logging.getLogger(__name__)


def check_distances(distances: Sequence[float]) -> list[float]:
    values = [float(d) for d in distances]
    if not values:
        raise ConfigurationError("scan needs at least one distance")
    for d in values:
        if not math.isfinite(d) or d <= 0.0:
            raise ConfigurationError(f"scan distances must be positive, got {d}")
    for left, right in zip(values, values[1:]):
        if not right > left:
            raise ConfigurationError(f"scan distances must be strictly increasing: {left} then {right}")
    return values


def distance_grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive grid ``start, start + step, ...``; endpoints rounded to 10 decimals."""
    if not step > 0.0:
        raise ConfigurationError(f"scan step must be positive, got {step}")
    if stop < start:
        raise ConfigurationError(f"scan range is reversed: {start} to {stop}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(count)]


def point_config(config: VqeConfig, distance: float, index: int) -> VqeConfig:
    """Config for one scan point: same options, own distance and derived seed."""
    return config.copy(update={"distance": distance, "seed": derive_seed(config.seed, "scan", index)})


def summarize(result: VqeResult) -> ScanPoint:
    return ScanPoint(
        distance=result.config.distance,
        vqe_total_energy=result.total_energy,
        reference_total_energy=result.reference_total_energy,
        n_evaluations=result.n_evaluations,
    )


def _failure(distance: float, exc: VqeError) -> ScanFailure:
    logger.warning("Scan point %s failed in stage %s: %s", distance, exc.stage, exc)
    return ScanFailure(distance=distance, stage=exc.stage, error=str(exc))


def _run_one(
    config: VqeConfig,
    distance: float,
    index: int,
    settings: AppSettings,
    start: np.ndarray | None = None,
) -> VqeResult | ScanFailure:
    try:
        run = execute_point(point_config(config, distance, index), settings=settings, start=start)
    except VqeError as exc:
        return _failure(distance, exc)
    logger.info(
        "Scan point %s finished: total_energy=%.12g reference=%.12g",
        distance,
        run.result.total_energy,
        run.result.reference_total_energy,
    )
    return run.result


def _collect(outcomes: Sequence[VqeResult | ScanFailure]) -> ScanResult:
    result = ScanResult()
    for outcome in outcomes:
        if isinstance(outcome, ScanFailure):
            result.failures.append(outcome)
        else:
            result.points.append(summarize(outcome))
    return result


def _run_sequential(
    config: VqeConfig,
    distances: list[float],
    settings: AppSettings,
    warm_start: bool,
) -> ScanResult:
    outcomes: list[VqeResult | ScanFailure] = []
    start: np.ndarray | None = None
    for index, distance in enumerate(distances):
        outcome = _run_one(config, distance, index, settings, start)
        if warm_start and isinstance(outcome, VqeResult):
            start = np.asarray(outcome.optimal_parameters, dtype=float)
        outcomes.append(outcome)
    return _collect(outcomes)


async def run_scan_async(
    config: VqeConfig,
    distances: Sequence[float],
    *,
    max_workers: int = 2,
    settings: AppSettings | None = None,
) -> ScanResult:
    """Run independent scan points in worker threads, at most ``max_workers`` at a time.

    Results come back in distance order and match the sequential scan.
    """
    if max_workers < 1:
        raise ConfigurationError(f"max_workers must be at least 1, got {max_workers}")
    settings = settings or get_settings()
    values = check_distances(distances)
    semaphore = asyncio.Semaphore(max_workers)

    async def worker(index: int, distance: float) -> VqeResult | ScanFailure:
        async with semaphore:
            return await asyncio.to_thread(_run_one, config, distance, index, settings)

    outcomes = await asyncio.gather(*(worker(i, d) for i, d in enumerate(values)))
    return _collect(outcomes)


def run_scan(
    config: VqeConfig,
    distances: Sequence[float],
    *,
    warm_start: bool = False,
    max_workers: int | None = None,
    settings: AppSettings | None = None,
) -> ScanResult:
    """Run one VQE point per distance.

    With ``warm_start`` each point starts from the previous point's optimal
    parameters, which forces sequential execution.
    """
    settings = settings or get_settings()
    values = check_distances(distances)
    workers = settings.scan_workers if max_workers is None else max_workers
    if workers < 1:
        raise ConfigurationError(f"max_workers must be at least 1, got {workers}")
    logger.info("Scan started: %d points, warm_start=%s, workers=%d", len(values), warm_start, workers)
    if workers > 1 and not warm_start:
        result = asyncio.run(run_scan_async(config, values, max_workers=workers, settings=settings))
    else:
        result = _run_sequential(config, values, settings, warm_start)
    logger.info("Scan finished: %d points, %d failures", len(result.points), len(result.failures))
    return result


__all__ = [
    "check_distances",
    "distance_grid",
    "point_config",
    "run_scan",
    "run_scan_async",
    "summarize",
]
