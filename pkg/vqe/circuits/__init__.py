"""Parameterized circuits: value types, initial states and variational forms."""

from .ansatz import (
    EmptyVariationalFormError,
    ExcitationList,
    InitialState,
    VariationalForm,
    build_ansatz,
    efficient_su2,
    excitation_preserving,
    excitations,
    hartree_fock_circuit,
    random_initial_point,
    real_amplitudes,
    two_local_ry_rz_cz,
    uccsd,
    zero_state,
)
from .circuit import BindingError, Circuit, CircuitValidationError, Gate, GateKind, ParameterRef

__all__ = [
    "BindingError",
    "Circuit",
    "CircuitValidationError",
    "EmptyVariationalFormError",
    "ExcitationList",
    "Gate",
    "GateKind",
    "InitialState",
    "ParameterRef",
    "VariationalForm",
    "build_ansatz",
    "efficient_su2",
    "excitation_preserving",
    "excitations",
    "hartree_fock_circuit",
    "random_initial_point",
    "real_amplitudes",
    "two_local_ry_rz_cz",
    "uccsd",
    "zero_state",
]
