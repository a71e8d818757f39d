"""
Application configuration models and helpers.

Centralizes settings management so the CLI, the pipeline services and the
scan workers share a consistent configuration surface. Values come from the
environment (``VQE_*`` variables) with a ``.env`` file as fallback.
"""

from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseSettings, Field, validator

# Existing environment variables take precedence over the file.
load_dotenv(".env", override=False)


class ScfSettings(BaseSettings):
    """Restricted Hartree-Fock convergence controls."""

    max_iterations: int = Field(200, env="VQE_SCF_MAX_ITER")
    energy_tolerance: float = Field(
        1e-10,
        env="VQE_SCF_ENERGY_TOL",
        description="Convergence threshold on the energy change, in Hartree.",
    )


class BackendSettings(BaseSettings):
    """Defaults for the statevector and sampled quantum instances."""

    shots: int = Field(8192, env="VQE_SHOTS")
    final_shot_multiplier: int = Field(
        10,
        env="VQE_FINAL_SHOT_MULTIPLIER",
        description="Shot multiplier for the final re-measurement on the sampled backend.",
    )
    pauli_threshold: float = Field(1e-8, env="VQE_PAULI_THRESHOLD")
    jacobi_max_dimension: int = Field(
        64,
        env="VQE_JACOBI_MAX_DIM",
        description="Largest matrix handed to the in-repo Jacobi eigensolver.",
    )


class OptimizerSettings(BaseSettings):
    """Tolerances and step sizes for the classical optimizers."""

    fd_step_exact: float = Field(1e-6, env="VQE_FD_STEP_EXACT")
    fd_step_sampled: float = Field(0.1, env="VQE_FD_STEP_SAMPLED")
    gtol: float = Field(1e-8, env="VQE_BFGS_GTOL")
    xtol: float = Field(1e-8, env="VQE_NM_XTOL")
    ftol: float = Field(1e-11, env="VQE_NM_FTOL")
    spsa_c: float = Field(0.2, env="VQE_SPSA_C")
    spsa_save_steps: int = Field(100, env="VQE_SPSA_SAVE_STEPS")


class AppSettings(BaseSettings):
    """Root settings object for the VQE engine."""

    environment: str = Field("development", env="VQE_ENV")
    log_level: str = Field("INFO", env="VQE_LOG_LEVEL")
    seed: int = Field(
        42,
        env="VQE_SEED",
        description="Master seed used when the caller does not supply one.",
    )
    max_iter: int = Field(500, env="VQE_MAX_ITER")
    scan_workers: int = Field(
        1,
        env="VQE_SCAN_WORKERS",
        description="Concurrent scan points; 1 runs the scan sequentially.",
    )
    scf: ScfSettings = Field(default_factory=ScfSettings)
    backend: BackendSettings = Field(default_factory=BackendSettings)
    optimizer: OptimizerSettings = Field(default_factory=OptimizerSettings)

    @validator("log_level")
    def _normalize_level(cls, value: str) -> str:
        """Accept lower-case level names from the environment."""
        return value.upper()

    @validator("scan_workers")
    def _at_least_one_worker(cls, value: int) -> int:
        if value < 1:
            raise ValueError("scan_workers must be at least 1")
        return value

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"


@lru_cache()
def get_settings() -> AppSettings:
    """Return a cached settings object."""
    return AppSettings()


__all__ = [
    "AppSettings",
    "BackendSettings",
    "OptimizerSettings",
    "ScfSettings",
    "get_settings",
]
