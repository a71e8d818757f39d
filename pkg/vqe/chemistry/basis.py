"""
Geometry and STO-3G basis value types for the hydrogen molecule.

Distances enter in Angstrom and are stored in Bohr; everything downstream
works in atomic units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from vqe.core.errors import ConfigurationError

BOHR_RADIUS_ANGSTROM = 0.529177210903
ANGSTROM_TO_BOHR = 1.0 / BOHR_RADIUS_ANGSTROM

# Standard published STO-3G hydrogen parameters (zeta = 1.24 already folded in).
STO3G_H_EXPONENTS = (3.42525091, 0.62391373, 0.16885540)
STO3G_H_COEFFICIENTS = (0.15432897, 0.53532814, 0.44463454)

SUPPORTED_ELEMENTS = {1: "H"}


class UnsupportedElementError(ConfigurationError):
    """Raised when a geometry contains atoms the minimal H basis cannot describe."""


@dataclass(frozen=True, slots=True)
class GaussianPrimitive:
    """Unnormalized s-type Gaussian ``exp(-exponent * r^2)`` with its contraction weight."""

    exponent: float
    contraction_coefficient: float

    def __post_init__(self) -> None:
        if not self.exponent > 0.0:
            raise ValueError(f"Gaussian exponent must be positive, got {self.exponent}")


@dataclass(frozen=True, slots=True, eq=False)
class ContractedOrbital:
    """Normalized contraction of s-type primitives centred on one atom."""

    center: np.ndarray
    primitives: tuple[GaussianPrimitive, ...]
    normalization: np.ndarray

    @property
    def exponents(self) -> np.ndarray:
        return np.array([p.exponent for p in self.primitives])

    @property
    def weights(self) -> np.ndarray:
        """Contraction coefficient times normalization, per primitive."""
        coefficients = np.array([p.contraction_coefficient for p in self.primitives])
        return coefficients * self.normalization

    def translated(self, shift: np.ndarray) -> "ContractedOrbital":
        return ContractedOrbital(
            center=self.center + np.asarray(shift, dtype=float),
            primitives=self.primitives,
            normalization=self.normalization,
        )


@dataclass(frozen=True, slots=True, eq=False)
class Atom:
    atomic_number: int
    position: np.ndarray


@dataclass(frozen=True, slots=True, eq=False)
class MoleculeGeometry:
    """Atoms with positions in Bohr plus total charge and spin (2S)."""

    atoms: tuple[Atom, ...]
    charge: int = 0
    spin: int = 0
    distance_angstrom: float | None = None

    @property
    def n_electrons(self) -> int:
        return sum(atom.atomic_number for atom in self.atoms) - self.charge

    def translated(self, shift: np.ndarray) -> "MoleculeGeometry":
        offset = np.asarray(shift, dtype=float)
        return MoleculeGeometry(
            atoms=tuple(Atom(a.atomic_number, a.position + offset) for a in self.atoms),
            charge=self.charge,
            spin=self.spin,
            distance_angstrom=self.distance_angstrom,
        )


def h2_geometry(distance_angstrom: float) -> MoleculeGeometry:
    """Two hydrogen atoms on the z axis, the first at the origin."""
    if not distance_angstrom > 0.0:
        raise ConfigurationError(
            f"inter-atomic distance must be positive, got {distance_angstrom} Angstrom"
        )
    separation = distance_angstrom * ANGSTROM_TO_BOHR
    return MoleculeGeometry(
        atoms=(
            Atom(1, np.zeros(3)),
            Atom(1, np.array([0.0, 0.0, separation])),
        ),
        charge=0,
        spin=0,
        distance_angstrom=distance_angstrom,
    )


def primitive_overlap_norm(exponent: float) -> float:
    """Normalization of a single s Gaussian, ``(2a/pi)^(3/4)``."""
    return (2.0 * exponent / math.pi) ** 0.75


def contracted_s_orbital(
    center: np.ndarray,
    exponents: tuple[float, ...] = STO3G_H_EXPONENTS,
    coefficients: tuple[float, ...] = STO3G_H_COEFFICIENTS,
) -> ContractedOrbital:
    """Build a contracted s orbital normalized to unit self-overlap."""
    primitives = tuple(
        GaussianPrimitive(exponent=a, contraction_coefficient=d)
        for a, d in zip(exponents, coefficients)
    )
    alphas = np.array(exponents)
    norms = np.array([primitive_overlap_norm(a) for a in exponents])
    weights = np.array(coefficients) * norms
    pair_sum = alphas[:, None] + alphas[None, :]
    self_overlap = float(weights @ ((math.pi / pair_sum) ** 1.5) @ weights)
    return ContractedOrbital(
        center=np.asarray(center, dtype=float),
        primitives=primitives,
        normalization=norms / math.sqrt(self_overlap),
    )


def sto3g_basis(geometry: MoleculeGeometry) -> tuple[ContractedOrbital, ...]:
    """One STO-3G 1s orbital per hydrogen atom."""
    for atom in geometry.atoms:
        if atom.atomic_number not in SUPPORTED_ELEMENTS:
            raise UnsupportedElementError(
                f"STO-3G parameters are only bundled for hydrogen; got Z={atom.atomic_number}"
            )
    return tuple(contracted_s_orbital(atom.position) for atom in geometry.atoms)


__all__ = [
    "ANGSTROM_TO_BOHR",
    "Atom",
    "BOHR_RADIUS_ANGSTROM",
    "ContractedOrbital",
    "GaussianPrimitive",
    "MoleculeGeometry",
    "STO3G_H_COEFFICIENTS",
    "STO3G_H_EXPONENTS",
    "UnsupportedElementError",
    "contracted_s_orbital",
    "h2_geometry",
    "sto3g_basis",
]
