"""Molecular integrals and Hartree-Fock for the hydrogen molecule."""

from .basis import (
    ANGSTROM_TO_BOHR,
    BOHR_RADIUS_ANGSTROM,
    Atom,
    ContractedOrbital,
    GaussianPrimitive,
    MoleculeGeometry,
    UnsupportedElementError,
    contracted_s_orbital,
    h2_geometry,
    sto3g_basis,
)
from .integrals import (
    AOIntegrals,
    IntegralDomainError,
    SingularGeometryError,
    SpinOrbitalIntegrals,
    ao_integrals,
    boys_f0,
    nuclear_repulsion,
    spin_orbital_integrals,
)
from .scf import ScfConvergenceError, ScfResult, rhf_scf

__all__ = [
    "ANGSTROM_TO_BOHR",
    "BOHR_RADIUS_ANGSTROM",
    "AOIntegrals",
    "Atom",
    "ContractedOrbital",
    "GaussianPrimitive",
    "IntegralDomainError",
    "MoleculeGeometry",
    "ScfConvergenceError",
    "ScfResult",
    "SingularGeometryError",
    "SpinOrbitalIntegrals",
    "UnsupportedElementError",
    "ao_integrals",
    "boys_f0",
    "contracted_s_orbital",
    "h2_geometry",
    "nuclear_repulsion",
    "rhf_scf",
    "spin_orbital_integrals",
]
