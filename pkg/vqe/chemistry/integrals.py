"""
Closed-form s-Gaussian integrals and the molecular spin-orbital tensors.

Atomic-orbital integrals use the Gaussian product theorem; the Coulomb-type
integrals reduce to the zeroth Boys function. Two-electron integrals over
atomic orbitals are kept in chemist notation ``(pq|rs)``; the spin-orbital
tensor handed to the fermionic layer is in physicist notation
``h2[p, q, r, s] = <pq|rs>``.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import erf

from vqe.chemistry.basis import (
    SUPPORTED_ELEMENTS,
    ContractedOrbital,
    MoleculeGeometry,
    UnsupportedElementError,
)
from vqe.core.errors import ConfigurationError, NumericalError

logger = logging.getLogger(__name__)

# Below this argument the cubic Taylor series is used; its truncation error
# (t^4 / 216) stays under 1e-14 here.
BOYS_SERIES_THRESHOLD = 1e-3


class IntegralDomainError(ConfigurationError):
    """Raised when an integral helper receives an argument outside its domain."""


class SingularGeometryError(NumericalError):
    """Raised when two nuclei coincide and the repulsion energy diverges."""


def boys_f0(t: float) -> float:
    """Zeroth-order Boys function ``F0(t) = integral_0^1 exp(-t u^2) du``."""
    if t < 0.0:
        raise IntegralDomainError(f"Boys function argument must be non-negative, got {t}")
    if t <= BOYS_SERIES_THRESHOLD:
        return 1.0 - t / 3.0 + t * t / 10.0 - t * t * t / 42.0
    root = math.sqrt(t)
    return 0.5 * math.sqrt(math.pi / t) * float(erf(root))


@dataclass(frozen=True, slots=True, eq=False)
class AOIntegrals:
    """Atomic-orbital integral matrices; ``eri`` is in chemist notation."""

    overlap: np.ndarray
    kinetic: np.ndarray
    nuclear_attraction: np.ndarray
    eri: np.ndarray

    @property
    def core_hamiltonian(self) -> np.ndarray:
        return self.kinetic + self.nuclear_attraction

    @property
    def n_orbitals(self) -> int:
        return self.overlap.shape[0]


@dataclass(frozen=True, slots=True, eq=False)
class SpinOrbitalIntegrals:
    """One- and two-body tensors over spin orbitals in (alpha..., beta...) block order."""

    h1: np.ndarray
    h2: np.ndarray
    n_spin_orbitals: int
    n_particles: int
    nuclear_repulsion: float

    @property
    def n_alpha(self) -> int:
        return (self.n_particles + 1) // 2

    @property
    def n_beta(self) -> int:
        return self.n_particles // 2


def _primitive_pair(a: float, center_a: np.ndarray, b: float, center_b: np.ndarray):
    p = a + b
    mu = a * b / p
    product_center = (a * center_a + b * center_b) / p
    distance_sq = float(np.sum((center_a - center_b) ** 2))
    return p, product_center, math.exp(-mu * distance_sq), mu, distance_sq


def _overlap_kinetic(orb_a: ContractedOrbital, orb_b: ContractedOrbital) -> tuple[float, float]:
    overlap = 0.0
    kinetic = 0.0
    for a, wa in zip(orb_a.exponents, orb_a.weights):
        for b, wb in zip(orb_b.exponents, orb_b.weights):
            p, _, decay, mu, distance_sq = _primitive_pair(a, orb_a.center, b, orb_b.center)
            s = (math.pi / p) ** 1.5 * decay
            overlap += wa * wb * s
            kinetic += wa * wb * mu * (3.0 - 2.0 * mu * distance_sq) * s
    return overlap, kinetic


def _nuclear_attraction(
    orb_a: ContractedOrbital,
    orb_b: ContractedOrbital,
    geometry: MoleculeGeometry,
) -> float:
    total = 0.0
    for a, wa in zip(orb_a.exponents, orb_a.weights):
        for b, wb in zip(orb_b.exponents, orb_b.weights):
            p, product_center, decay, _, _ = _primitive_pair(a, orb_a.center, b, orb_b.center)
            for atom in geometry.atoms:
                t = p * float(np.sum((product_center - atom.position) ** 2))
                total -= wa * wb * atom.atomic_number * (2.0 * math.pi / p) * decay * boys_f0(t)
    return total


def _electron_repulsion(
    orb_a: ContractedOrbital,
    orb_b: ContractedOrbital,
    orb_c: ContractedOrbital,
    orb_d: ContractedOrbital,
) -> float:
    total = 0.0
    for a, wa in zip(orb_a.exponents, orb_a.weights):
        for b, wb in zip(orb_b.exponents, orb_b.weights):
            p, center_p, decay_ab, _, _ = _primitive_pair(a, orb_a.center, b, orb_b.center)
            for c, wc in zip(orb_c.exponents, orb_c.weights):
                for d, wd in zip(orb_d.exponents, orb_d.weights):
                    q, center_q, decay_cd, _, _ = _primitive_pair(c, orb_c.center, d, orb_d.center)
                    rho = p * q / (p + q)
                    t = rho * float(np.sum((center_p - center_q) ** 2))
                    prefactor = 2.0 * math.pi**2.5 / (p * q * math.sqrt(p + q))
                    total += wa * wb * wc * wd * prefactor * decay_ab * decay_cd * boys_f0(t)
    return total


def ao_integrals(
    geometry: MoleculeGeometry,
    basis: Sequence[ContractedOrbital],
) -> AOIntegrals:
    """Overlap, kinetic, nuclear-attraction and repulsion integrals over s orbitals."""
    for atom in geometry.atoms:
        if atom.atomic_number not in SUPPORTED_ELEMENTS:
            raise UnsupportedElementError(
                f"only hydrogen centres are supported, got Z={atom.atomic_number}"
            )
    n = len(basis)
    overlap = np.zeros((n, n))
    kinetic = np.zeros((n, n))
    attraction = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            s, t = _overlap_kinetic(basis[i], basis[j])
            v = _nuclear_attraction(basis[i], basis[j], geometry)
            overlap[i, j] = overlap[j, i] = s
            kinetic[i, j] = kinetic[j, i] = t
            attraction[i, j] = attraction[j, i] = v

    eri = np.zeros((n, n, n, n))
    computed: dict[tuple[int, int, int, int], float] = {}
    for p, q, r, s in itertools.product(range(n), repeat=4):
        # Canonical representative of the 8-fold permutation group.
        pq = (max(p, q), min(p, q))
        rs = (max(r, s), min(r, s))
        key = (*max(pq, rs), *min(pq, rs))
        if key not in computed:
            computed[key] = _electron_repulsion(basis[p], basis[q], basis[r], basis[s])
        eri[p, q, r, s] = computed[key]

    logger.debug("AO integrals computed: %d orbitals, %d unique ERIs", n, len(computed))
    return AOIntegrals(overlap=overlap, kinetic=kinetic, nuclear_attraction=attraction, eri=eri)


def nuclear_repulsion(geometry: MoleculeGeometry) -> float:
    """Sum of ``Z_i Z_j / r_ij`` over atom pairs, in Hartree."""
    if len(geometry.atoms) < 2:
        raise ConfigurationError("nuclear repulsion needs at least two atoms")
    energy = 0.0
    for first, second in itertools.combinations(geometry.atoms, 2):
        distance = float(np.linalg.norm(first.position - second.position))
        if distance == 0.0:
            raise SingularGeometryError("coincident nuclei make the repulsion energy infinite")
        energy += first.atomic_number * second.atomic_number / distance
    return energy


def spin_orbital_integrals(
    ao: AOIntegrals,
    mo_coefficients: np.ndarray,
    geometry: MoleculeGeometry,
) -> SpinOrbitalIntegrals:
    """Rotate AO integrals to the MO basis and expand them over spin orbitals.

    Spin orbital ``k`` maps to spatial orbital ``k % n`` with spin alpha for
    ``k < n`` and beta otherwise.
    """
    c = np.asarray(mo_coefficients, dtype=float)
    n = c.shape[1]
    h1_mo = c.T @ ao.core_hamiltonian @ c
    # (pq|rs) in the MO basis.
    eri_mo = np.einsum("ap,bq,abcd,cr,ds->pqrs", c, c, ao.eri, c, c, optimize=True)

    n_spin = 2 * n
    spatial = np.arange(n_spin) % n
    spin = np.arange(n_spin) // n
    same_spin = (spin[:, None] == spin[None, :]).astype(float)

    h1 = h1_mo[np.ix_(spatial, spatial)] * same_spin
    # <PQ|RS> = (pr|qs) delta(spin P, spin R) delta(spin Q, spin S)
    chem = eri_mo[np.ix_(spatial, spatial, spatial, spatial)]
    h2 = np.transpose(chem, (0, 2, 1, 3)) * same_spin[:, None, :, None] * same_spin[None, :, None, :]

    return SpinOrbitalIntegrals(
        h1=h1,
        h2=h2,
        n_spin_orbitals=n_spin,
        n_particles=geometry.n_electrons,
        nuclear_repulsion=nuclear_repulsion(geometry),
    )


__all__ = [
    "AOIntegrals",
    "IntegralDomainError",
    "SingularGeometryError",
    "SpinOrbitalIntegrals",
    "ao_integrals",
    "boys_f0",
    "nuclear_repulsion",
    "spin_orbital_integrals",
]
