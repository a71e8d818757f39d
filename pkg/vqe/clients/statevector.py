"""
Dense statevector simulation and exact Pauli-sum expectations.

Amplitudes are stored flat with index bit ``q`` equal to qubit ``q``. During
simulation the vector is viewed as an ``n``-axis tensor, where qubit ``q``
lives on axis ``n - 1 - q``, and gates are contracted in with ``tensordot``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from vqe.circuits.circuit import BindingError, Circuit, CircuitValidationError, Gate, GateKind
from vqe.clients.base import ExpectationEstimate
from vqe.core.errors import ConfigurationError
from vqe.operators.pauli import PauliString, PauliSum, z_parity

logger = logging.getLogger(__name__)

_SQRT_HALF = 1.0 / math.sqrt(2.0)
_FIXED_1Q = {
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT_HALF,
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
}
_FIXED_2Q = {
    GateKind.CX: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
}
_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


def gate_matrix(kind: GateKind, angle: float | None = None) -> np.ndarray:
    """Unitary of a bound gate.

    Two-qubit matrices are written in the basis ``|a b>`` with the first
    listed qubit ``a`` as the more significant bit.
    """
    if kind in _FIXED_1Q:
        return _FIXED_1Q[kind]
    if kind in _FIXED_2Q:
        return _FIXED_2Q[kind]
    if angle is None:
        raise BindingError(f"{kind.value} needs a bound angle")
    c, s = math.cos(angle / 2.0), math.sin(angle / 2.0)
    if kind is GateKind.RX:
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind is GateKind.RY:
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind is GateKind.RZ:
        return np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)])
    if kind is GateKind.XXPLUSYY:
        # exp(-i angle (XX + YY) / 2) rotates inside the {01, 10} subspace.
        cos_t, sin_t = math.cos(angle), math.sin(angle)
        return np.array(
            [
                [1, 0, 0, 0],
                [0, cos_t, -1j * sin_t, 0],
                [0, -1j * sin_t, cos_t, 0],
                [0, 0, 0, 1],
            ],
            dtype=complex,
        )
    raise CircuitValidationError(f"no matrix for gate kind {kind}")


@dataclass(slots=True, eq=False)
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray

    @classmethod
    def zero(cls, n_qubits: int) -> "StateVector":
        amplitudes = np.zeros(1 << n_qubits, dtype=complex)
        amplitudes[0] = 1.0
        return cls(n_qubits, amplitudes)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes.copy())

    def apply(self, gate: Gate) -> None:
        """Apply a bound gate in place."""
        if gate.is_parameterized:
            raise BindingError(f"gate {gate.describe()} still has a free parameter")
        n = self.n_qubits
        for q in gate.qubits:
            if not 0 <= q < n:
                raise CircuitValidationError(f"qubit {q} outside a {n}-qubit register")
        matrix = gate_matrix(gate.kind, gate.angle)
        tensor = self.amplitudes.reshape([2] * n)
        axes = [n - 1 - q for q in gate.qubits]
        k = len(axes)
        op = matrix.reshape([2] * (2 * k))
        moved = np.tensordot(op, tensor, axes=(list(range(k, 2 * k)), axes))
        self.amplitudes = np.moveaxis(moved, list(range(k)), axes).reshape(-1)

    def apply_pauli_basis_change(self, string: PauliString) -> None:
        """Rotate so that measuring Z on the support measures ``string``."""
        for q in range(string.n_qubits):
            letter = string.letter(q)
            if letter == "X":
                self.apply(Gate(GateKind.H, (q,)))
            elif letter == "Y":
                self.apply(Gate(GateKind.SDG, (q,)))
                self.apply(Gate(GateKind.H, (q,)))


def simulate(circuit: Circuit, bindings: Sequence[float] | np.ndarray = ()) -> StateVector:
    """Evolve ``|0...0>`` through the bound circuit."""
    bound = circuit.bind(bindings) if circuit.n_parameters or len(bindings) else circuit
    state = StateVector.zero(bound.n_qubits)
    for gate in bound.gates:
        state.apply(gate)
    return state


def circuit_unitary(circuit: Circuit, bindings: Sequence[float] | np.ndarray = ()) -> np.ndarray:
    """Dense unitary of a circuit, column ``b`` being the image of basis state ``b``."""
    bound = circuit.bind(bindings) if circuit.n_parameters or len(bindings) else circuit
    dim = 1 << bound.n_qubits
    columns = []
    for b in range(dim):
        state = StateVector(bound.n_qubits, np.eye(dim, dtype=complex)[b])
        for gate in bound.gates:
            state.apply(gate)
        columns.append(state.amplitudes)
    return np.stack(columns, axis=1)


def pauli_expectation(amplitudes: np.ndarray, string: PauliString) -> complex:
    """``<psi|P|psi>`` by index permutation, without a dense matrix."""
    indices = np.arange(amplitudes.size)
    phase = _I_POWERS[(string.x_mask & string.z_mask).bit_count() % 4]
    signs = 1.0 - 2.0 * z_parity(indices, string.z_mask)
    image = np.conj(amplitudes[indices ^ string.x_mask])
    return complex(phase * np.sum(image * signs * amplitudes))


def expectation_exact(state: StateVector, hamiltonian: PauliSum) -> ExpectationEstimate:
    if hamiltonian.n_qubits != state.n_qubits:
        raise ConfigurationError(
            f"Hamiltonian on {hamiltonian.n_qubits} qubits, state on {state.n_qubits}"
        )
    total = 0j
    for term in hamiltonian.terms:
        total += term.coefficient * pauli_expectation(state.amplitudes, term.string)
    return ExpectationEstimate(value=float(total.real), stddev=0.0, shots_used=0)


class StatevectorClient:
    """Exact energy evaluation, the ``statevector`` quantum instance."""

    name = "statevector"

    def __init__(self, hamiltonian: PauliSum) -> None:
        self._hamiltonian = hamiltonian

    @property
    def hamiltonian(self) -> PauliSum:
        return self._hamiltonian

    def estimate(
        self,
        circuit: Circuit,
        parameters: Sequence[float] | np.ndarray,
    ) -> ExpectationEstimate:
        return expectation_exact(simulate(circuit, parameters), self._hamiltonian)


__all__ = [
    "StateVector",
    "StatevectorClient",
    "circuit_unitary",
    "expectation_exact",
    "gate_matrix",
    "pauli_expectation",
    "simulate",
]
