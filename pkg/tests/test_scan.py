try:
    from . import _bootstrap  # noqa: F401
except Exception:  # pragma: no cover - fallback for direct execution
    import _bootstrap  # type: ignore # noqa: F401

import math

import pytest

from vqe.core.errors import ConfigurationError, NumericalError
from vqe.schemas.vqe import InitialPointKind, VqeConfig
from vqe.services import check_distances, distance_grid, point_config, run_point, run_scan, run_scan_async
from vqe.services import scan as scan_module

SHORT_GRID = [0.6, 0.74, 1.0]


def test_distance_grid_is_inclusive() -> None:
    assert distance_grid(0.3, 0.6, 0.1) == [0.3, 0.4, 0.5, 0.6]
    grid = distance_grid(0.3, 2.5, 0.1)
    assert len(grid) == 23
    assert grid[0] == 0.3 and grid[-1] == 2.5
    assert distance_grid(1.0, 1.0, 0.5) == [1.0]


@pytest.mark.parametrize("start,stop,step", [(0.3, 2.5, 0.0), (0.3, 2.5, -0.1), (2.5, 0.3, 0.1)])
def test_distance_grid_rejects_bad_ranges(start: float, stop: float, step: float) -> None:
    with pytest.raises(ConfigurationError):
        distance_grid(start, stop, step)


@pytest.mark.parametrize("distances", [[], [0.5, 0.5], [1.0, 0.7], [0.0, 1.0], [0.5, math.nan]])
def test_check_distances_rejects_bad_lists(distances) -> None:
    with pytest.raises(ConfigurationError):
        check_distances(distances)


def test_point_config_derives_one_seed_per_index() -> None:
    config = VqeConfig(seed=5)
    first, second = point_config(config, 0.7, 0), point_config(config, 0.8, 1)
    assert first.distance == 0.7 and second.distance == 0.8
    assert first.seed != second.seed
    assert first.seed == point_config(config, 0.9, 0).seed
    assert config.distance == 0.74


def test_single_point_scan_matches_point_run() -> None:
    config = VqeConfig()
    scan = run_scan(config, [0.74])
    expected = run_point(point_config(config, 0.74, 0))
    assert not scan.partial
    assert scan.points[0].vqe_total_energy == expected.total_energy
    assert scan.points[0].reference_total_energy == expected.reference_total_energy
    assert scan.points[0].n_evaluations == expected.n_evaluations


def test_scan_points_follow_the_grid() -> None:
    scan = run_scan(VqeConfig(), SHORT_GRID)
    assert [p.distance for p in scan.points] == SHORT_GRID
    for point in scan.points:
        assert point.vqe_total_energy == pytest.approx(point.reference_total_energy, abs=1e-6)


def test_failed_point_is_recorded_and_scan_continues(monkeypatch) -> None:
    real_execute = scan_module.execute_point

    def flaky(config, **kwargs):
        if config.distance == 0.74:
            raise NumericalError("SCF did not converge", stage="scf")
        return real_execute(config, **kwargs)

    monkeypatch.setattr(scan_module, "execute_point", flaky)
    scan = run_scan(VqeConfig(), SHORT_GRID)
    assert scan.partial
    assert [p.distance for p in scan.points] == [0.6, 1.0]
    assert len(scan.failures) == 1
    failure = scan.failures[0]
    assert failure.distance == 0.74
    assert failure.stage == "scf"
    assert "SCF did not converge" in failure.error


def test_every_point_failing_still_returns_a_result() -> None:
    config = VqeConfig(initial_point=InitialPointKind.EXPLICIT, initial_values=[0.1])
    scan = run_scan(config, SHORT_GRID)
    assert scan.points == []
    assert [f.stage for f in scan.failures] == ["optimize"] * 3


def test_warm_start_reuses_previous_optimum(monkeypatch) -> None:
    starts = []
    real_execute = scan_module.execute_point

    def spy(config, **kwargs):
        starts.append(kwargs.get("start"))
        return real_execute(config, **kwargs)

    monkeypatch.setattr(scan_module, "execute_point", spy)
    scan = run_scan(VqeConfig(), SHORT_GRID, warm_start=True, max_workers=4)
    assert starts[0] is None
    assert all(s is not None and len(s) == 3 for s in starts[1:])
    for point in scan.points:
        assert point.vqe_total_energy == pytest.approx(point.reference_total_energy, abs=1e-6)


@pytest.mark.asyncio
async def test_threaded_scan_matches_sequential_scan() -> None:
    config = VqeConfig()
    threaded = await run_scan_async(config, SHORT_GRID, max_workers=3)
    sequential = run_scan(config, SHORT_GRID, max_workers=1)
    assert threaded == sequential


def test_worker_count_must_be_positive() -> None:
    with pytest.raises(ConfigurationError):
        run_scan(VqeConfig(), SHORT_GRID, max_workers=0)


@pytest.mark.slow
def test_dissociation_curve_minimum_near_equilibrium() -> None:
    scan = run_scan(VqeConfig(), distance_grid(0.3, 2.5, 0.1), max_workers=2)
    assert not scan.partial
    assert len(scan.points) == 23
    lowest = min(scan.points, key=lambda p: p.vqe_total_energy)
    assert 0.70 <= lowest.distance <= 0.78
    for point in scan.points:
        assert point.vqe_total_energy == pytest.approx(point.reference_total_energy, abs=1e-6)
    # Reference curve flattens toward two separated hydrogen atoms.
    assert scan.points[-1].reference_total_energy > lowest.reference_total_energy
