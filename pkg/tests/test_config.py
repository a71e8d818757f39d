try:
    from . import _bootstrap  # noqa: F401
except Exception:  # pragma: no cover - fallback for direct execution
    import _bootstrap  # type: ignore # noqa: F401

import numpy as np
import pytest
from pydantic import ValidationError

from vqe.core.config import AppSettings, get_settings
from vqe.utils.seeding import derive_seed, make_rng


def test_bootstrap_defaults_apply():
    settings = get_settings()
    assert settings.environment == "test"
    assert settings.seed == 42
    assert settings.scan_workers == 1
    assert settings.backend.shots == 8192
    assert settings.backend.final_shot_multiplier == 10


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("VQE_LOG_LEVEL", "debug")
    monkeypatch.setenv("VQE_SHOTS", "1024")
    monkeypatch.setenv("VQE_BFGS_GTOL", "1e-6")
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.log_level == "DEBUG"
    assert settings.backend.shots == 1024
    assert settings.optimizer.gtol == 1e-6


def test_settings_are_cached():
    assert get_settings() is get_settings()


def test_scan_workers_must_be_positive(monkeypatch):
    monkeypatch.setenv("VQE_SCAN_WORKERS", "0")
    with pytest.raises(ValidationError):
        AppSettings()


def test_derived_seeds_are_stable_and_label_specific():
    assert derive_seed(42, "spsa") == derive_seed(42, "spsa")
    assert derive_seed(42, "spsa") != derive_seed(42, "sampler")
    assert derive_seed(42, "scan", 0) != derive_seed(42, "scan", 1)
    assert derive_seed(42, "scan", 0) != derive_seed(43, "scan", 0)
    assert 0 <= derive_seed(7, "x") < 2**64


def test_make_rng_streams_repeat():
    first = make_rng(3, "initial_point").random(5)
    second = make_rng(3, "initial_point").random(5)
    np.testing.assert_array_equal(first, second)
    assert not np.array_equal(first, make_rng(3, "other").random(5))
