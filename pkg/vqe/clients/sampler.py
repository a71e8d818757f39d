"""
Shot-sampled Hamiltonian averaging, the ``qasm`` quantum instance.

Every non-identity Pauli term is measured on its own with fresh shots after
rotating its support into the Z basis; the identity term is added exactly.
"""

from __future__ import annotations

import logging
import math
from typing import Sequence

import numpy as np

from vqe.circuits.circuit import Circuit
from vqe.clients.base import ExpectationEstimate
from vqe.clients.statevector import StateVector, simulate
from vqe.core.errors import ConfigurationError
from vqe.operators.fermion import HamiltonianValidationError
from vqe.operators.pauli import PauliSum, is_hermitian, z_parity
from vqe.utils.seeding import derive_seed

logger = logging.getLogger(__name__)


def _check_shots(shots: int) -> None:
    if shots < 1:
        raise ConfigurationError(f"shots must be at least 1, got {shots}")


def _draw(state: StateVector, shots: int, rng: np.random.Generator) -> np.ndarray:
    probabilities = state.probabilities
    probabilities = probabilities / probabilities.sum()
    return rng.choice(probabilities.size, size=shots, p=probabilities)


def sample_counts(state: StateVector, shots: int, seed: int | None = None) -> dict[str, int]:
    """Histogram of ``shots`` draws; bitstrings print qubit ``n - 1`` leftmost."""
    _check_shots(shots)
    outcomes = _draw(state, shots, np.random.default_rng(seed))
    values, counts = np.unique(outcomes, return_counts=True)
    return {
        format(int(v), f"0{state.n_qubits}b"): int(c) for v, c in zip(values, counts)
    }


def expectation_sampled(
    circuit: Circuit,
    bindings: Sequence[float] | np.ndarray,
    hamiltonian: PauliSum,
    shots: int,
    seed: int | None = None,
) -> ExpectationEstimate:
    """Per-term sampled estimate with ``stddev = sqrt(sum c^2 var / shots)``."""
    _check_shots(shots)
    if not is_hermitian(hamiltonian, 1e-10):
        raise HamiltonianValidationError("sampled estimation needs a Hermitian Hamiltonian")
    if hamiltonian.n_qubits != circuit.n_qubits:
        raise ConfigurationError(
            f"Hamiltonian on {hamiltonian.n_qubits} qubits, circuit on {circuit.n_qubits}"
        )
    rng = np.random.default_rng(seed)
    prepared = simulate(circuit, bindings)

    value = 0.0
    variance = 0.0
    measured = 0
    for term in hamiltonian.terms:
        coefficient = term.coefficient.real
        if term.string.is_identity:
            value += coefficient
            continue
        state = prepared.copy()
        state.apply_pauli_basis_change(term.string)
        outcomes = _draw(state, shots, rng)
        eigenvalues = 1.0 - 2.0 * z_parity(outcomes, term.string.support)
        mean = float(np.mean(eigenvalues))
        value += coefficient * mean
        variance += coefficient * coefficient * max(0.0, 1.0 - mean * mean)
        measured += 1

    return ExpectationEstimate(
        value=value,
        stddev=math.sqrt(variance / shots),
        shots_used=shots * measured,
    )


class SamplerClient:
    """Sampled energy evaluation; each call draws from its own derived seed."""

    name = "sampled"

    def __init__(self, hamiltonian: PauliSum, *, shots: int, seed: int) -> None:
        _check_shots(shots)
        self._hamiltonian = hamiltonian
        self._shots = shots
        self._seed = seed
        self._calls = 0

    @property
    def shots(self) -> int:
        return self._shots

    @property
    def hamiltonian(self) -> PauliSum:
        return self._hamiltonian

    def estimate(
        self,
        circuit: Circuit,
        parameters: Sequence[float] | np.ndarray,
        *,
        shots: int | None = None,
    ) -> ExpectationEstimate:
        self._calls += 1
        seed = derive_seed(self._seed, "sampler", self._calls)
        return expectation_sampled(
            circuit,
            parameters,
            self._hamiltonian,
            shots or self._shots,
            seed,
        )


__all__ = ["SamplerClient", "expectation_sampled", "sample_counts"]
