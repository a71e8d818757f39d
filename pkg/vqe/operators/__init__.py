"""Pauli algebra and fermion-to-qubit mappings."""

from .encodings import (
    Mapping,
    UnknownMappingError,
    annihilation_operator,
    creation_operator,
    encode_occupation,
    encoding_matrix,
    ladder_sets,
    parse_mapping,
)
from .fermion import (
    FermionValidationError,
    FermionicOperator,
    HamiltonianValidationError,
    QubitHamiltonian,
    SymmetryError,
    build_fermionic,
    map_fermionic,
    number_operator,
    qubit_hamiltonian,
    two_qubit_reduction,
)
from .pauli import (
    DEFAULT_THRESHOLD,
    PauliDimensionError,
    PauliResourceError,
    PauliString,
    PauliSum,
    PauliTerm,
    is_hermitian,
    multiply,
    simplify,
    to_matrix,
)

__all__ = [
    "DEFAULT_THRESHOLD",
    "FermionValidationError",
    "FermionicOperator",
    "HamiltonianValidationError",
    "Mapping",
    "PauliDimensionError",
    "PauliResourceError",
    "PauliString",
    "PauliSum",
    "PauliTerm",
    "QubitHamiltonian",
    "SymmetryError",
    "UnknownMappingError",
    "annihilation_operator",
    "build_fermionic",
    "creation_operator",
    "encode_occupation",
    "encoding_matrix",
    "is_hermitian",
    "ladder_sets",
    "map_fermionic",
    "multiply",
    "number_operator",
    "parse_mapping",
    "qubit_hamiltonian",
    "simplify",
    "to_matrix",
    "two_qubit_reduction",
]
