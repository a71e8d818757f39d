"""
Pydantic models for run configuration, results and exported artifacts.
"""

import math
from enum import Enum
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, root_validator, validator

from vqe.circuits.ansatz import InitialState, VariationalForm
from vqe.operators.encodings import Mapping
from vqe.optimizers.base import OptimizerKind


class BackendKind(str, Enum):
    STATEVECTOR = "statevector"
    SAMPLED = "sampled"


class InitialPointKind(str, Enum):
    ZEROS = "zeros"
    RANDOM = "random"
    EXPLICIT = "explicit"


class VqeConfig(BaseModel):
    """Everything needed to run one VQE point; defaults mirror the H2 reference run."""

    distance: float = Field(0.74, gt=0.0, description="Inter-atomic distance in Angstrom.")
    basis: Literal["sto3g"] = Field("sto3g", description="Only the STO-3G minimal basis is bundled.")
    mapping: Mapping = Field(Mapping.PARITY)
    tqr: bool = Field(True, description="Apply the two-qubit reduction (parity mapping only).")
    initial_state: InitialState = Field(InitialState.HARTREE_FOCK)
    var_form: VariationalForm = Field(VariationalForm.UCCSD)
    depth: int = Field(1, ge=1)
    optimizer: OptimizerKind = Field(OptimizerKind.BFGS)
    backend: BackendKind = Field(BackendKind.STATEVECTOR)
    shots: int = Field(8192, ge=1, description="Shots per Pauli term on the sampled backend.")
    max_iter: int = Field(500, ge=0)
    seed: int = Field(42, description="Master seed for initial point, SPSA and sampling.")
    initial_point: InitialPointKind = Field(InitialPointKind.RANDOM)
    random_interval: List[float] = Field(
        default_factory=lambda: [0.0, 1.0],
        description="Uniform interval for random starts; a single value v means [0, v].",
    )
    initial_values: Optional[List[float]] = Field(
        None, description="Explicit starting parameters when initial_point is 'explicit'."
    )
    fd_step: Optional[float] = Field(
        None, gt=0.0, description="Finite-difference step; backend-dependent default when unset."
    )
    spsa_a: Optional[float] = Field(None, gt=0.0, description="SPSA gain; calibrated when unset.")
    spsa_c: Optional[float] = Field(None, gt=0.0)
    save_steps: Optional[int] = Field(None, ge=1)

    class Config:
        extra = "forbid"

    @validator("random_interval")
    def _check_interval(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("random_interval must not be empty")
        if len(value) > 2:
            raise ValueError("random_interval takes one or two values")
        bounds = [0.0, value[0]] if len(value) == 1 else value
        if bounds[0] > bounds[1]:
            raise ValueError(f"random_interval is reversed: {bounds}")
        return value

    @validator("initial_values")
    def _check_values(cls, value: Optional[List[float]]) -> Optional[List[float]]:
        if value is not None and not all(math.isfinite(v) for v in value):
            raise ValueError("initial_values must be finite")
        return value

    @root_validator(skip_on_failure=True)
    def _check_consistency(cls, values: dict) -> dict:
        if values.get("tqr") and values.get("mapping") is not Mapping.PARITY:
            raise ValueError("tqr requires the parity mapping")
        if values.get("initial_point") is InitialPointKind.EXPLICIT and not values.get("initial_values"):
            raise ValueError("initial_point 'explicit' needs initial_values")
        return values


class TraceEntry(BaseModel):
    nfev: int
    parameters: List[float]
    energy: float
    stddev: float


class VqeResult(BaseModel):
    """Outcome of one VQE point; energies in Hartree."""

    electronic_energy: float
    shift: float = Field(..., description="Nuclear-repulsion energy.")
    total_energy: float
    reference_total_energy: float = Field(..., description="Exact lowest eigenvalue plus shift.")
    rhf_total_energy: float
    final_stddev: float = 0.0
    optimal_parameters: List[float]
    n_evaluations: int
    n_qubits: int
    n_parameters: int
    converged: bool = False
    stalled: bool = False
    trace: List[TraceEntry] = Field(default_factory=list)
    config: VqeConfig

    @root_validator(skip_on_failure=True)
    def _total_is_sum(cls, values: dict) -> dict:
        if values["total_energy"] != values["electronic_energy"] + values["shift"]:
            raise ValueError("total_energy must equal electronic_energy + shift")
        return values


class ScanPoint(BaseModel):
    distance: float
    vqe_total_energy: float
    reference_total_energy: float
    n_evaluations: int


class ScanFailure(BaseModel):
    distance: float
    stage: Optional[str] = None
    error: str


class ScanResult(BaseModel):
    points: List[ScanPoint] = Field(default_factory=list)
    failures: List[ScanFailure] = Field(default_factory=list)

    @property
    def partial(self) -> bool:
        return bool(self.failures)


class PauliTermDump(BaseModel):
    label: str = Field(..., description="Pauli letters, qubit 0 leftmost.")
    real: float
    imag: float


class QubitHamiltonianDump(BaseModel):
    n_qubits: int
    shift: float
    n_particles: int
    mapping_tag: Mapping
    reduced: bool
    terms: List[PauliTermDump] = Field(default_factory=list)
