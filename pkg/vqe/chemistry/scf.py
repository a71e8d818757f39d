"""Restricted Hartree-Fock for closed-shell molecules in a small s basis."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from vqe.chemistry.basis import MoleculeGeometry
from vqe.chemistry.integrals import AOIntegrals, nuclear_repulsion
from vqe.core.errors import ConfigurationError, NumericalError
from vqe.utils.linalg import jacobi_eigh, symmetric_eigh_2x2

logger = logging.getLogger(__name__)


class ScfConvergenceError(NumericalError):
    """Raised when the SCF energy does not settle within the iteration limit."""

    def __init__(self, message: str, *, last_energy: float, stage: str | None = None) -> None:
        super().__init__(message, stage=stage)
        self.last_energy = last_energy


@dataclass(slots=True, eq=False)
class ScfResult:
    mo_coefficients: np.ndarray
    orbital_energies: np.ndarray
    rhf_total_energy: float
    electronic_energy: float
    iterations: int
    energy_history: list[float] = field(default_factory=list)


def _symmetric_eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if matrix.shape == (2, 2):
        return symmetric_eigh_2x2(matrix)
    return jacobi_eigh(matrix)


def orthogonalizer(overlap: np.ndarray) -> np.ndarray:
    """Symmetric (Loewdin) orthogonalizer ``S^{-1/2}``."""
    values, vectors = _symmetric_eigh(overlap)
    if np.min(values) <= 0.0:
        raise NumericalError("overlap matrix is not positive definite")
    return vectors @ np.diag(values**-0.5) @ vectors.T


def _fix_phase(coefficients: np.ndarray) -> np.ndarray:
    # First significant component of every MO is positive.
    fixed = coefficients.copy()
    for k in range(fixed.shape[1]):
        column = fixed[:, k]
        pivot = int(np.argmax(np.abs(column) > 1e-12))
        if column[pivot] < 0.0:
            fixed[:, k] = -column
    return fixed


def _diagonalize_fock(fock: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    values, vectors = _symmetric_eigh(x.T @ fock @ x)
    return values, _fix_phase(x @ vectors)


def _two_electron_term(density: np.ndarray, eri: np.ndarray) -> np.ndarray:
    coulomb = np.einsum("ls,mnsl->mn", density, eri)
    exchange = np.einsum("ls,mlsn->mn", density, eri)
    return coulomb - 0.5 * exchange


def rhf_scf(
    ao: AOIntegrals,
    geometry: MoleculeGeometry,
    *,
    max_iterations: int = 200,
    energy_tolerance: float = 1e-10,
) -> ScfResult:
    """Run closed-shell SCF from the core-Hamiltonian guess.

    Converges on the change in electronic energy between iterations; the
    returned total energy includes nuclear repulsion.
    """
    n_electrons = geometry.n_electrons
    if n_electrons <= 0 or n_electrons % 2:
        raise ConfigurationError(
            f"restricted Hartree-Fock needs a positive even electron count, got {n_electrons}"
        )
    n_occupied = n_electrons // 2
    if n_occupied > ao.n_orbitals:
        raise ConfigurationError("more occupied orbitals than basis functions")

    core = ao.core_hamiltonian
    x = orthogonalizer(ao.overlap)
    shift = nuclear_repulsion(geometry)

    orbital_energies, coefficients = _diagonalize_fock(core, x)
    history: list[float] = []
    previous = np.inf
    for iteration in range(1, max_iterations + 1):
        occupied = coefficients[:, :n_occupied]
        density = 2.0 * occupied @ occupied.T
        fock = core + _two_electron_term(density, ao.eri)
        energy = 0.5 * float(np.sum(density * (core + fock)))
        history.append(energy)
        orbital_energies, coefficients = _diagonalize_fock(fock, x)
        logger.debug("SCF iteration %d: electronic energy %.12f", iteration, energy)
        if abs(energy - previous) < energy_tolerance:
            break
        previous = energy
    else:
        raise ScfConvergenceError(
            f"SCF did not converge in {max_iterations} iterations",
            last_energy=history[-1] + shift if history else float("nan"),
        )

    # Density of the final coefficients reproduces the converged energy.
    occupied = coefficients[:, :n_occupied]
    density = 2.0 * occupied @ occupied.T
    fock = core + _two_electron_term(density, ao.eri)
    electronic = 0.5 * float(np.sum(density * (core + fock)))

    logger.info("SCF converged in %d iterations: RHF total energy %.12f", len(history), electronic + shift)
    return ScfResult(
        mo_coefficients=coefficients,
        orbital_energies=orbital_energies,
        rhf_total_energy=electronic + shift,
        electronic_energy=electronic,
        iterations=len(history),
        energy_history=history,
    )


__all__ = ["ScfConvergenceError", "ScfResult", "orthogonalizer", "rhf_scf"]
