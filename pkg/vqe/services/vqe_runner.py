"""
Single-point VQE pipeline.

integrals -> RHF -> spin-orbital tensors -> qubit Hamiltonian -> ansatz ->
initial point -> optimizer -> exact reference. Every objective evaluation
lands in the result trace; the reported energy is a final re-evaluation of
the best parameters.
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from vqe.chemistry.basis import MoleculeGeometry, h2_geometry, sto3g_basis
from vqe.chemistry.integrals import SpinOrbitalIntegrals, ao_integrals, spin_orbital_integrals
from vqe.chemistry.scf import ScfResult, rhf_scf
from vqe.circuits.ansatz import build_ansatz, random_initial_point
from vqe.circuits.circuit import Circuit
from vqe.clients.base import EnergyClient, ExpectationEstimate
from vqe.clients.sampler import SamplerClient
from vqe.clients.statevector import StatevectorClient
from vqe.core.config import AppSettings, get_settings
from vqe.core.errors import ConfigurationError, VqeError
from vqe.operators.fermion import QubitHamiltonian, qubit_hamiltonian
from vqe.optimizers.base import IterationRecord, Objective, OptimizerKind, OptResult
from vqe.optimizers.bfgs import bfgs_fd
from vqe.optimizers.nelder_mead import nelder_mead
from vqe.optimizers.spsa import spsa
from vqe.schemas.vqe import BackendKind, InitialPointKind, TraceEntry, VqeConfig, VqeResult
from vqe.services.exact_reference import lowest_eigenvalue
from vqe.utils.seeding import derive_seed, make_rng

logger = logging.getLogger(__name__)


@contextmanager
def pipeline_stage(stage: str, **context: object) -> Iterator[None]:
    """Tag any engine error raised inside the block with ``stage``."""
    try:
        yield
    except VqeError as exc:
        if exc.stage is None:
            exc.stage = stage
        logger.error("Pipeline stage %s failed: %s", stage, exc, extra={"stage": stage, **context})
        raise


@dataclass(slots=True, eq=False)
class PointProblem:
    """Everything built before optimization starts."""

    geometry: MoleculeGeometry
    scf: ScfResult
    integrals: SpinOrbitalIntegrals
    hamiltonian: QubitHamiltonian
    ansatz: Circuit


@dataclass(slots=True, eq=False)
class PointRun:
    result: VqeResult
    problem: PointProblem
    optimization: OptResult


class _EnergyFunction:
    """Objective body; ``final_shots`` switches the sampler to the re-measurement budget."""

    def __init__(self, client: EnergyClient, circuit: Circuit) -> None:
        self._client = client
        self._circuit = circuit
        self.final_shots: int | None = None

    def __call__(self, parameters: np.ndarray) -> ExpectationEstimate:
        if self.final_shots is not None and isinstance(self._client, SamplerClient):
            return self._client.estimate(self._circuit, parameters, shots=self.final_shots)
        return self._client.estimate(self._circuit, parameters)


def prepare_problem(config: VqeConfig, settings: AppSettings | None = None) -> PointProblem:
    """Chemistry, mapping and ansatz for one geometry."""
    settings = settings or get_settings()
    context = {"distance": config.distance}
    with pipeline_stage("integrals", **context):
        geometry = h2_geometry(config.distance)
        ao = ao_integrals(geometry, sto3g_basis(geometry))
    with pipeline_stage("scf", **context):
        scf = rhf_scf(
            ao,
            geometry,
            max_iterations=settings.scf.max_iterations,
            energy_tolerance=settings.scf.energy_tolerance,
        )
        integrals = spin_orbital_integrals(ao, scf.mo_coefficients, geometry)
    with pipeline_stage("mapping", mapping=config.mapping.value, **context):
        hamiltonian = qubit_hamiltonian(
            integrals,
            config.mapping,
            tqr=config.tqr,
            threshold=settings.backend.pauli_threshold,
        )
    with pipeline_stage("ansatz", var_form=config.var_form.value, **context):
        ansatz = build_ansatz(
            config.var_form,
            config.initial_state,
            n_spin_orbitals=integrals.n_spin_orbitals,
            n_particles=integrals.n_particles,
            mapping=config.mapping,
            reduced=config.tqr,
            depth=config.depth,
        )
    return PointProblem(geometry, scf, integrals, hamiltonian, ansatz)


def initial_parameters(config: VqeConfig, n_parameters: int) -> np.ndarray:
    if config.initial_point is InitialPointKind.ZEROS:
        return np.zeros(n_parameters)
    if config.initial_point is InitialPointKind.EXPLICIT:
        values = np.asarray(config.initial_values, dtype=float)
        if values.size != n_parameters:
            raise ConfigurationError(
                f"explicit initial point has {values.size} values, the ansatz has {n_parameters}"
            )
        return values
    return random_initial_point(
        n_parameters,
        config.random_interval,
        rng=make_rng(config.seed, "initial_point"),
    )


def _build_client(config: VqeConfig, problem: PointProblem) -> EnergyClient:
    pauli_sum = problem.hamiltonian.pauli_sum
    if config.backend is BackendKind.SAMPLED:
        return SamplerClient(pauli_sum, shots=config.shots, seed=derive_seed(config.seed, "sampler"))
    return StatevectorClient(pauli_sum)


def _optimize(
    config: VqeConfig,
    objective: Objective,
    x0: np.ndarray,
    settings: AppSettings,
) -> OptResult:
    opts = settings.optimizer
    if config.optimizer is OptimizerKind.NELDER_MEAD:
        return nelder_mead(objective, x0, config.max_iter, xtol=opts.xtol, ftol=opts.ftol)
    if config.optimizer is OptimizerKind.SPSA:
        return spsa(
            objective,
            x0,
            config.max_iter,
            a=config.spsa_a,
            c=config.spsa_c or opts.spsa_c,
            save_steps=config.save_steps or opts.spsa_save_steps,
            seed=derive_seed(config.seed, "spsa"),
        )
    default_step = opts.fd_step_sampled if config.backend is BackendKind.SAMPLED else opts.fd_step_exact
    return bfgs_fd(
        objective,
        x0,
        config.max_iter,
        gtol=opts.gtol,
        fd_step=config.fd_step or default_step,
    )


def execute_point(
    config: VqeConfig,
    *,
    settings: AppSettings | None = None,
    start: Sequence[float] | np.ndarray | None = None,
) -> PointRun:
    """Run the full pipeline; ``start`` overrides the configured initial point."""
    settings = settings or get_settings()
    logger.info(
        "VQE point started: distance=%s mapping=%s tqr=%s var_form=%s optimizer=%s backend=%s",
        config.distance,
        config.mapping.value,
        config.tqr,
        config.var_form.value,
        config.optimizer.value,
        config.backend.value,
    )
    problem = prepare_problem(config, settings)
    ansatz = problem.ansatz
    trace: list[IterationRecord] = []

    with pipeline_stage("optimize", distance=config.distance):
        x0 = initial_parameters(config, ansatz.n_parameters) if start is None else np.asarray(start, dtype=float)
        client = _build_client(config, problem)
        energy = _EnergyFunction(client, ansatz)
        objective = Objective(energy, ansatz.n_parameters, callback=trace.append)
        optimization = _optimize(config, objective, x0, settings)
        if config.backend is BackendKind.SAMPLED:
            energy.final_shots = config.shots * settings.backend.final_shot_multiplier
        final = objective.evaluate(optimization.best_parameters)

    with pipeline_stage("reference", distance=config.distance):
        spectrum = lowest_eigenvalue(
            problem.hamiltonian.pauli_sum,
            max_jacobi_dimension=settings.backend.jacobi_max_dimension,
        )

    shift = problem.hamiltonian.shift
    result = VqeResult(
        electronic_energy=final.value,
        shift=shift,
        total_energy=final.value + shift,
        reference_total_energy=spectrum.ground_energy + shift,
        rhf_total_energy=problem.scf.rhf_total_energy,
        final_stddev=final.stddev,
        optimal_parameters=[float(v) for v in optimization.best_parameters],
        n_evaluations=objective.nfev,
        n_qubits=problem.hamiltonian.n_qubits,
        n_parameters=ansatz.n_parameters,
        converged=optimization.converged,
        stalled=optimization.stalled,
        trace=[
            TraceEntry(
                nfev=r.nfev,
                parameters=[float(v) for v in r.parameters],
                energy=r.energy,
                stddev=r.stddev,
            )
            for r in trace
        ],
        config=config,
    )
    logger.info(
        "VQE point finished: distance=%s total_energy=%.12g reference=%.12g nfev=%d",
        config.distance,
        result.total_energy,
        result.reference_total_energy,
        result.n_evaluations,
    )
    return PointRun(result=result, problem=problem, optimization=optimization)


def run_point(config: VqeConfig, *, settings: AppSettings | None = None) -> VqeResult:
    return execute_point(config, settings=settings).result


__all__ = [
    "PointProblem",
    "PointRun",
    "execute_point",
    "initial_parameters",
    "pipeline_stage",
    "prepare_problem",
    "run_point",
]
