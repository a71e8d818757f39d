try:
    from . import _bootstrap  # noqa: F401
except Exception:  # pragma: no cover - fallback for direct execution
    import _bootstrap  # type: ignore # noqa: F401

import numpy as np
import pytest
import scipy.linalg

from vqe.chemistry import (
    BOHR_RADIUS_ANGSTROM,
    MoleculeGeometry,
    ScfConvergenceError,
    ao_integrals,
    h2_geometry,
    rhf_scf,
    sto3g_basis,
)
from vqe.chemistry.scf import orthogonalizer
from vqe.core.errors import ConfigurationError


def fock_matrix(ao, coefficients: np.ndarray) -> np.ndarray:
    occupied = coefficients[:, :1]
    density = 2.0 * occupied @ occupied.T
    coulomb = np.einsum("ls,mnsl->mn", density, ao.eri)
    exchange = np.einsum("ls,mlsn->mn", density, ao.eri)
    return ao.core_hamiltonian + coulomb - 0.5 * exchange


def test_rhf_energy_at_equilibrium(h2_scf) -> None:
    assert h2_scf.rhf_total_energy == pytest.approx(-1.116759, abs=1e-5)
    assert h2_scf.iterations >= 2


def test_rhf_matches_generalized_eigenproblem(h2_ao, h2_scf) -> None:
    fock = fock_matrix(h2_ao, h2_scf.mo_coefficients)
    reference = scipy.linalg.eigh(fock, h2_ao.overlap, eigvals_only=True)
    np.testing.assert_allclose(h2_scf.orbital_energies, reference, atol=1e-8)


def test_molecular_orbitals_are_overlap_orthonormal(h2_ao, h2_scf) -> None:
    c = h2_scf.mo_coefficients
    np.testing.assert_allclose(c.T @ h2_ao.overlap @ c, np.eye(2), atol=1e-10)


def test_bonding_orbital_has_positive_phase(h2_scf) -> None:
    bonding = h2_scf.mo_coefficients[:, 0]
    assert bonding[0] > 0.0
    assert bonding[1] == pytest.approx(bonding[0], abs=1e-10)


def test_rhf_energy_history_settles(h2_scf) -> None:
    history = h2_scf.energy_history
    assert abs(history[-1] - history[-2]) < 1e-10


@pytest.mark.parametrize("distance", [0.5, 0.74, 1.4, 2.5])
def test_rhf_energy_never_rises_after_first_iteration(distance: float) -> None:
    geometry = h2_geometry(distance)
    history = rhf_scf(ao_integrals(geometry, sto3g_basis(geometry)), geometry).energy_history
    assert len(history) >= 2
    for earlier, later in zip(history[1:], history[2:]):
        assert later <= earlier + 1e-12


def test_textbook_energy_at_one_point_four_bohr() -> None:
    geometry = h2_geometry(1.4 * BOHR_RADIUS_ANGSTROM)
    result = rhf_scf(ao_integrals(geometry, sto3g_basis(geometry)), geometry)
    assert result.rhf_total_energy == pytest.approx(-1.1167, abs=2e-4)


def test_orthogonalizer_inverts_overlap_square_root(h2_ao) -> None:
    x = orthogonalizer(h2_ao.overlap)
    np.testing.assert_allclose(x @ h2_ao.overlap @ x, np.eye(2), atol=1e-12)


def test_iteration_limit_raises_with_last_energy(h2_ao, h2_geom) -> None:
    with pytest.raises(ScfConvergenceError) as excinfo:
        rhf_scf(h2_ao, h2_geom, max_iterations=1)
    assert np.isfinite(excinfo.value.last_energy)


def test_open_shell_rejected(h2_ao, h2_geom) -> None:
    cation = MoleculeGeometry(atoms=h2_geom.atoms, charge=1)
    with pytest.raises(ConfigurationError):
        rhf_scf(h2_ao, cation)
