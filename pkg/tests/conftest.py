"""Pytest configuration and shared H2 fixtures."""

try:
    from . import _bootstrap  # noqa: F401
except Exception:  # pragma: no cover - fallback for direct execution
    import _bootstrap  # type: ignore # noqa: F401

import pytest

from vqe.chemistry import ao_integrals, h2_geometry, rhf_scf, spin_orbital_integrals, sto3g_basis
from vqe.core.config import get_settings
from vqe.operators import Mapping, qubit_hamiltonian

EQUILIBRIUM_ANGSTROM = 0.74


@pytest.fixture(autouse=True)
def _fresh_settings():
    """Settings are cached process-wide; tests that patch the env need a reload."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def h2_geom():
    return h2_geometry(EQUILIBRIUM_ANGSTROM)


@pytest.fixture(scope="session")
def h2_ao(h2_geom):
    return ao_integrals(h2_geom, sto3g_basis(h2_geom))


@pytest.fixture(scope="session")
def h2_scf(h2_ao, h2_geom):
    return rhf_scf(h2_ao, h2_geom)


@pytest.fixture(scope="session")
def h2_ints(h2_ao, h2_scf, h2_geom):
    return spin_orbital_integrals(h2_ao, h2_scf.mo_coefficients, h2_geom)


@pytest.fixture(scope="session")
def h2_hamiltonians(h2_ints):
    """Mapped H2 Hamiltonians keyed by ``(mapping, reduced)``."""
    return {
        (Mapping.JORDAN_WIGNER, False): qubit_hamiltonian(h2_ints, Mapping.JORDAN_WIGNER),
        (Mapping.PARITY, False): qubit_hamiltonian(h2_ints, Mapping.PARITY),
        (Mapping.BRAVYI_KITAEV, False): qubit_hamiltonian(h2_ints, Mapping.BRAVYI_KITAEV),
        (Mapping.PARITY, True): qubit_hamiltonian(h2_ints, Mapping.PARITY, tqr=True),
    }
