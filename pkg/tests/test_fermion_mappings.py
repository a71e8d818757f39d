try:
    from . import _bootstrap  # noqa: F401
except Exception:  # pragma: no cover - fallback for direct execution
    import _bootstrap  # type: ignore # noqa: F401

from itertools import product

import numpy as np
import pytest

from vqe.operators import (
    FermionValidationError,
    FermionicOperator,
    Mapping,
    PauliSum,
    SymmetryError,
    UnknownMappingError,
    annihilation_operator,
    creation_operator,
    encode_occupation,
    encoding_matrix,
    map_fermionic,
    number_operator,
    parse_mapping,
    qubit_hamiltonian,
    two_qubit_reduction,
)
from vqe.operators.encodings import gf2_inverse

ALL_MAPPINGS = list(Mapping)
N_MODES = 4


def basis_index(bits: np.ndarray) -> int:
    return int(sum(int(b) << q for q, b in enumerate(bits)))


def test_parse_mapping_accepts_names_and_rejects_unknown() -> None:
    assert parse_mapping("PARITY") is Mapping.PARITY
    assert parse_mapping(Mapping.JORDAN_WIGNER) is Mapping.JORDAN_WIGNER
    with pytest.raises(UnknownMappingError):
        parse_mapping("majorana")


def test_bravyi_kitaev_matrix_on_four_modes() -> None:
    expected = np.array(
        [
            [1, 0, 0, 0],
            [1, 1, 0, 0],
            [0, 0, 1, 0],
            [1, 1, 1, 1],
        ]
    )
    np.testing.assert_array_equal(encoding_matrix(4, Mapping.BRAVYI_KITAEV), expected)


@pytest.mark.parametrize("mapping", ALL_MAPPINGS)
@pytest.mark.parametrize("n_modes", [1, 3, 4, 8])
def test_encoding_matrix_is_invertible_over_gf2(mapping: Mapping, n_modes: int) -> None:
    beta = encoding_matrix(n_modes, mapping).astype(np.int64)
    inverse = gf2_inverse(beta).astype(np.int64)
    np.testing.assert_array_equal((inverse @ beta) % 2, np.eye(n_modes, dtype=np.int64))


@pytest.mark.parametrize("mapping", ALL_MAPPINGS)
def test_canonical_anticommutation_relations(mapping: Mapping) -> None:
    identity = np.eye(1 << N_MODES)
    create = [creation_operator(p, N_MODES, mapping).to_matrix() for p in range(N_MODES)]
    destroy = [annihilation_operator(p, N_MODES, mapping).to_matrix() for p in range(N_MODES)]
    for p, q in product(range(N_MODES), repeat=2):
        np.testing.assert_allclose(
            destroy[p] @ create[q] + create[q] @ destroy[p],
            identity if p == q else 0.0,
            atol=1e-12,
        )
        np.testing.assert_allclose(destroy[p] @ destroy[q] + destroy[q] @ destroy[p], 0.0, atol=1e-12)


@pytest.mark.parametrize("mapping", ALL_MAPPINGS)
def test_number_operator_counts_encoded_occupations(mapping: Mapping) -> None:
    matrix = number_operator(N_MODES, mapping).to_matrix()
    for occupation in product((0, 1), repeat=N_MODES):
        index = basis_index(encode_occupation(list(occupation), mapping))
        state = np.zeros(1 << N_MODES)
        state[index] = 1.0
        np.testing.assert_allclose(matrix @ state, sum(occupation) * state, atol=1e-12)


@pytest.mark.parametrize("mapping", ALL_MAPPINGS)
def test_hamiltonian_commutes_with_particle_number(mapping: Mapping, h2_hamiltonians) -> None:
    hamiltonian = h2_hamiltonians[(mapping, False)].pauli_sum.to_matrix()
    number = number_operator(N_MODES, mapping).to_matrix()
    assert np.linalg.norm(hamiltonian @ number - number @ hamiltonian) < 1e-12


def test_fermionic_operator_rejects_broken_symmetry() -> None:
    h1 = np.zeros((2, 2))
    h1[0, 1] = 1.0
    with pytest.raises(FermionValidationError):
        FermionicOperator(h1=h1, h2=np.zeros((2, 2, 2, 2)), n_modes=2)
    with pytest.raises(FermionValidationError):
        FermionicOperator(h1=np.zeros((3, 3)), h2=np.zeros((2, 2, 2, 2)), n_modes=2)


def test_jordan_wigner_hamiltonian_term_count(h2_hamiltonians) -> None:
    hamiltonian = h2_hamiltonians[(Mapping.JORDAN_WIGNER, False)]
    assert hamiltonian.n_qubits == 4
    assert len(hamiltonian.pauli_sum) == 15


def test_reduced_parity_hamiltonian_has_five_terms(h2_hamiltonians) -> None:
    hamiltonian = h2_hamiltonians[(Mapping.PARITY, True)]
    assert hamiltonian.n_qubits == 2
    assert hamiltonian.reduced
    labels = {t.string.label for t in hamiltonian.pauli_sum.terms}
    assert labels == {"II", "ZI", "IZ", "ZZ", "XX"}


def test_mapped_hamiltonians_are_real(h2_hamiltonians) -> None:
    for hamiltonian in h2_hamiltonians.values():
        assert all(t.coefficient.imag == 0.0 for t in hamiltonian.pauli_sum.terms)


def test_all_mappings_share_one_spectrum(h2_hamiltonians) -> None:
    spectra = [
        np.linalg.eigvalsh(h2_hamiltonians[(mapping, False)].pauli_sum.to_matrix())
        for mapping in ALL_MAPPINGS
    ]
    for spectrum in spectra[1:]:
        np.testing.assert_allclose(spectrum, spectra[0], atol=1e-10)


def test_reduction_preserves_ground_energy(h2_hamiltonians) -> None:
    full = np.linalg.eigvalsh(h2_hamiltonians[(Mapping.PARITY, False)].pauli_sum.to_matrix())
    reduced = np.linalg.eigvalsh(h2_hamiltonians[(Mapping.PARITY, True)].pauli_sum.to_matrix())
    assert reduced[0] == pytest.approx(full[0], abs=1e-10)


@pytest.mark.parametrize("mapping", ALL_MAPPINGS)
def test_hartree_fock_determinant_energy_matches_rhf(mapping: Mapping, h2_hamiltonians, h2_scf) -> None:
    hamiltonian = h2_hamiltonians[(mapping, False)]
    matrix = hamiltonian.pauli_sum.to_matrix()
    # Block order: alpha orbitals first, then beta.
    index = basis_index(encode_occupation([1, 0, 1, 0], mapping))
    energy = matrix[index, index].real + hamiltonian.shift
    assert energy == pytest.approx(h2_scf.rhf_total_energy, abs=1e-8)


def test_reduction_rejected_for_non_parity_mapping(h2_ints) -> None:
    with pytest.raises(SymmetryError):
        qubit_hamiltonian(h2_ints, Mapping.JORDAN_WIGNER, tqr=True)


def test_reduction_rejects_off_diagonal_symmetry_qubits() -> None:
    with pytest.raises(SymmetryError):
        two_qubit_reduction(PauliSum.from_labels([(1.0, "IXII")]), 2)
    with pytest.raises(SymmetryError):
        two_qubit_reduction(PauliSum.from_labels([(1.0, "XII")]), 2)


def test_reduction_substitutes_sector_signs() -> None:
    # One alpha electron: Z on qubit 1 becomes -1; two electrons: Z on qubit 3 becomes +1.
    reduced = two_qubit_reduction(PauliSum.from_labels([(0.5, "ZZIZ"), (0.25, "IZXZ")]), 2)
    coefficients = {t.string.label: t.coefficient.real for t in reduced.terms}
    assert coefficients == {"ZI": -0.5, "IX": -0.25}


def test_map_fermionic_respects_threshold(h2_ints) -> None:
    from vqe.operators import build_fermionic

    op = build_fermionic(h2_ints)
    loose = map_fermionic(op, Mapping.JORDAN_WIGNER, threshold=0.1)
    tight = map_fermionic(op, Mapping.JORDAN_WIGNER)
    assert len(loose) < len(tight)
    assert all(abs(t.coefficient) >= 0.1 for t in loose.terms)
