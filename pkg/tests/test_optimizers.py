try:
    from . import _bootstrap  # noqa: F401
except Exception:  # pragma: no cover - fallback for direct execution
    import _bootstrap  # type: ignore # noqa: F401

import math

import numpy as np
import pytest

from vqe.clients.base import ExpectationEstimate
from vqe.core.errors import ConfigurationError
from vqe.optimizers import (
    IterationRecord,
    NonFiniteObjectiveError,
    Objective,
    ObjectiveDimensionError,
    bfgs_fd,
    central_difference_gradient,
    nelder_mead,
    spsa,
)
from vqe.optimizers.bfgs import interpolated_step

TARGET = np.array([1.0, -2.0])


def quadratic(x: np.ndarray) -> ExpectationEstimate:
    return ExpectationEstimate(float(np.sum((x - TARGET) ** 2)))


def skewed(x: np.ndarray) -> ExpectationEstimate:
    # Mildly ill-conditioned bowl with a cosine ripple; minimum at TARGET.
    d = x - TARGET
    return ExpectationEstimate(float(3.0 * d[0] ** 2 + d[0] * d[1] + d[1] ** 2 + 1.0 - math.cos(d[1])))


def make_objective(function=quadratic, arity: int = 2):
    records: list[IterationRecord] = []
    return Objective(function, arity, callback=records.append), records


def check_trace(result) -> None:
    nfevs = [r.nfev for r in result.trace]
    assert nfevs == sorted(set(nfevs))
    assert result.best_value == min(r.energy for r in result.trace)


def test_objective_counts_and_reports_every_call() -> None:
    objective, records = make_objective()
    objective([0.0, 0.0])
    objective.evaluate(np.array([1.0, -2.0]))
    assert objective.nfev == 2
    assert [r.nfev for r in records] == [1, 2]
    assert records[1].energy == 0.0


def test_objective_rejects_wrong_arity() -> None:
    objective, _ = make_objective()
    with pytest.raises(ObjectiveDimensionError):
        objective([1.0, 2.0, 3.0])
    with pytest.raises(ConfigurationError):
        Objective(quadratic, 0)


def test_objective_rejects_non_finite_values() -> None:
    objective, _ = make_objective(lambda x: ExpectationEstimate(float("nan")))
    with pytest.raises(NonFiniteObjectiveError):
        objective([0.0, 0.0])


def test_central_difference_matches_five_point_stencil() -> None:
    objective, _ = make_objective(skewed)
    x = np.array([0.3, 0.7])
    h = 1e-3
    gradient = central_difference_gradient(objective, x, 1e-6)
    stencil = np.empty(2)
    for i in range(2):
        e = np.zeros(2)
        e[i] = h
        stencil[i] = (
            -objective(x + 2 * e) + 8 * objective(x + e) - 8 * objective(x - e) + objective(x - 2 * e)
        ) / (12 * h)
    np.testing.assert_allclose(gradient, stencil, atol=1e-6)


def test_bfgs_solves_isotropic_quadratic_in_one_step() -> None:
    objective, _ = make_objective()
    result = bfgs_fd(objective, [0.0, 0.0], gtol=1e-6)
    assert result.converged
    assert result.n_iterations == 1
    np.testing.assert_allclose(result.best_parameters, TARGET, atol=1e-6)
    check_trace(result)


def test_bfgs_terminates_on_anisotropic_quadratic() -> None:
    curvatures = np.array([1.0, 4.0, 9.0])

    def bowl(x: np.ndarray) -> ExpectationEstimate:
        return ExpectationEstimate(float(0.5 * np.sum(curvatures * x * x)))

    objective, _ = make_objective(bowl, arity=3)
    result = bfgs_fd(objective, [1.0, -2.0, 0.5], gtol=1e-10)
    assert result.converged
    assert result.n_iterations <= 3 + 2
    assert np.max(np.abs(result.best_parameters)) <= 1e-10
    check_trace(result)


def test_interpolated_step_hits_parabola_minimum() -> None:
    # f(t) = (t - 0.3)^2 has f(0) = 0.09, f'(0) = -0.6 and f(1) = 0.49.
    assert interpolated_step(0.09, -0.6, 1.0, 0.49) == pytest.approx(0.3)
    assert interpolated_step(1.0, -1.0, 1.0, 0.0) is None


def test_bfgs_converges_on_skewed_bowl() -> None:
    objective, _ = make_objective(skewed)
    result = bfgs_fd(objective, [3.0, 3.0], max_iter=200, gtol=1e-6)
    assert result.converged
    assert not result.stalled
    np.testing.assert_allclose(result.best_parameters, TARGET, atol=1e-5)
    assert result.n_evaluations == objective.nfev
    check_trace(result)


def test_bfgs_rejects_non_positive_step() -> None:
    objective, _ = make_objective()
    with pytest.raises(ConfigurationError):
        bfgs_fd(objective, [0.0, 0.0], fd_step=0.0)


def test_nelder_mead_converges_on_skewed_bowl() -> None:
    objective, _ = make_objective(skewed)
    result = nelder_mead(objective, [0.0, 0.0], max_iter=1000, xtol=1e-7, ftol=1e-10)
    assert result.converged
    np.testing.assert_allclose(result.best_parameters, TARGET, atol=1e-5)
    check_trace(result)


def test_spsa_approaches_minimum_with_fixed_gains() -> None:
    objective, _ = make_objective()
    result = spsa(objective, [0.0, 0.0], max_iter=500, a=1.0, c=0.1, seed=11)
    assert np.linalg.norm(result.best_parameters - TARGET) < 1e-3
    # One start evaluation, then two perturbed evaluations and one iterate per iteration.
    assert objective.nfev == 1 + 3 * 500
    check_trace(result)


def test_spsa_is_reproducible_and_calibrates_gain() -> None:
    first, _ = make_objective()
    second, _ = make_objective()
    a = spsa(first, [0.5, 0.5], max_iter=40, seed=3)
    b = spsa(second, [0.5, 0.5], max_iter=40, seed=3)
    np.testing.assert_array_equal(a.best_parameters, b.best_parameters)
    assert first.nfev == 1 + 2 * 25 + 3 * 40


def test_spsa_trace_keeps_strided_final_and_best_iterates() -> None:
    objective, _ = make_objective()
    result = spsa(objective, [0.0, 0.0], max_iter=30, a=0.5, c=0.1, save_steps=10, seed=2)
    recorded = [r.nfev for r in result.trace]
    # Iterates 10, 20 and 30 land on evaluations 1 + 3k.
    assert {31, 61, 91} <= set(recorded)
    assert len(recorded) <= 4
    check_trace(result)


@pytest.mark.parametrize("optimizer", [nelder_mead, bfgs_fd, spsa])
def test_zero_iterations_evaluate_start_once(optimizer) -> None:
    objective, _ = make_objective()
    result = optimizer(objective, [0.25, 0.5], 0)
    assert objective.nfev == 1
    np.testing.assert_array_equal(result.best_parameters, [0.25, 0.5])
    assert [r.nfev for r in result.trace] == [1]


@pytest.mark.parametrize("optimizer", [nelder_mead, bfgs_fd, spsa])
def test_non_finite_objective_keeps_partial_result(optimizer) -> None:
    def poisoned(x: np.ndarray) -> ExpectationEstimate:
        poisoned.calls += 1
        return quadratic(x) if poisoned.calls <= 5 else ExpectationEstimate(float("inf"))

    poisoned.calls = 0
    objective, _ = make_objective(poisoned)
    with pytest.raises(NonFiniteObjectiveError) as excinfo:
        optimizer(objective, [0.0, 0.0], 50)
    partial = excinfo.value.partial_result
    assert partial is not None
    assert math.isfinite(partial.best_value)


@pytest.mark.parametrize("optimizer", [nelder_mead, bfgs_fd, spsa])
def test_start_point_dimension_checked(optimizer) -> None:
    objective, _ = make_objective()
    with pytest.raises(ObjectiveDimensionError):
        optimizer(objective, [0.0, 0.0, 0.0], 10)
