"""Exact ground-state references: dense Pauli-sum diagonalization and a determinant FCI."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from vqe.chemistry.integrals import SpinOrbitalIntegrals
from vqe.core.errors import ConfigurationError
from vqe.operators.fermion import HamiltonianValidationError
from vqe.operators.pauli import PauliSum, is_hermitian, to_matrix
from vqe.utils.linalg import EigensolverError, hermitian_eigh

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-9


@dataclass(slots=True, eq=False)
class SpectrumResult:
    eigenvalues: np.ndarray
    ground_energy: float
    ground_state: np.ndarray


def lowest_eigenvalue(
    hamiltonian: PauliSum,
    *,
    max_jacobi_dimension: int = 64,
) -> SpectrumResult:
    """Full spectrum of a Hermitian Pauli sum, ascending."""
    if not is_hermitian(hamiltonian, 1e-10):
        raise HamiltonianValidationError("exact diagonalization needs a Hermitian Hamiltonian")
    matrix = to_matrix(hamiltonian)
    matrix = 0.5 * (matrix + matrix.conj().T)
    values, vectors = hermitian_eigh(matrix, max_jacobi_dimension=max_jacobi_dimension)
    residuals = np.linalg.norm(matrix @ vectors - vectors * values[None, :], axis=0)
    worst = float(np.max(residuals))
    if worst >= RESIDUAL_TOLERANCE:
        raise EigensolverError(f"eigenpair residual {worst:.3e} exceeds {RESIDUAL_TOLERANCE}")
    logger.debug("Exact spectrum computed: dimension %d, ground energy %.12f", matrix.shape[0], float(values[0]))
    return SpectrumResult(eigenvalues=values, ground_energy=float(values[0]), ground_state=vectors[:, 0])


def fci_oracle(ints: SpinOrbitalIntegrals) -> float:
    """Lowest total energy from the six two-electron determinants, Slater-Condon rules."""
    if ints.n_particles != 2 or ints.n_spin_orbitals != 4:
        raise ConfigurationError(
            "determinant oracle supports 2 electrons in 4 spin orbitals, got "
            f"{ints.n_particles} in {ints.n_spin_orbitals}"
        )
    h1, h2 = ints.h1, ints.h2
    determinants = list(combinations(range(ints.n_spin_orbitals), 2))
    size = len(determinants)
    matrix = np.zeros((size, size))
    # |pq> = a+_p a+_q |vac> with p < q.
    for row, (r, s) in enumerate(determinants):
        for col, (p, q) in enumerate(determinants):
            one_body = (
                h1[r, p] * (s == q)
                - h1[r, q] * (s == p)
                - h1[s, p] * (r == q)
                + h1[s, q] * (r == p)
            )
            matrix[row, col] = one_body + h2[r, s, p, q] - h2[r, s, q, p]
    values, _ = hermitian_eigh(0.5 * (matrix + matrix.T))
    return float(values[0]) + ints.nuclear_repulsion


__all__ = ["RESIDUAL_TOLERANCE", "SpectrumResult", "fci_oracle", "lowest_eigenvalue"]
