"""
Initial-state circuits and variational forms.

Hardware-efficient forms alternate ``depth + 1`` rotation layers with
``depth`` full entangling layers (every pair ``i < j`` in ascending order).
UCCSD compiles each Pauli string of every mapped excitation generator into
basis changes, a CX staircase and one RZ.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Sequence

import numpy as np

from vqe.circuits.circuit import Circuit, Gate, GateKind, ParameterRef
from vqe.core.errors import ConfigurationError
from vqe.operators.encodings import (
    Mapping,
    annihilation_operator,
    creation_operator,
    encode_occupation,
    parse_mapping,
)
from vqe.operators.fermion import two_qubit_reduction
from vqe.operators.pauli import PauliString, PauliSum, simplify

logger = logging.getLogger(__name__)


class EmptyVariationalFormError(ConfigurationError):
    """Raised when a filling admits no excitations to parameterize."""


class VariationalForm(str, Enum):
    UCCSD = "uccsd"
    REAL_AMPLITUDES = "real_amplitudes"
    EFFICIENT_SU2 = "efficient_su2"
    TWO_LOCAL = "two_local"
    EXCITATION_PRESERVING = "excitation_preserving"


class InitialState(str, Enum):
    ZERO = "zero"
    HARTREE_FOCK = "hartree_fock"


@dataclass(frozen=True, slots=True)
class ExcitationList:
    singles: tuple[tuple[int, int], ...]
    doubles: tuple[tuple[int, int, int, int], ...]

    def __len__(self) -> int:
        return len(self.singles) + len(self.doubles)


def _spin_filling(n_spin_orbitals: int, n_particles: int) -> tuple[int, int, int]:
    if n_spin_orbitals < 2 or n_spin_orbitals % 2:
        raise ConfigurationError(f"spin-orbital count must be even and >= 2, got {n_spin_orbitals}")
    n_spatial = n_spin_orbitals // 2
    n_alpha, n_beta = (n_particles + 1) // 2, n_particles // 2
    if not 0 <= n_particles <= n_spin_orbitals or n_alpha > n_spatial:
        raise ConfigurationError(
            f"{n_particles} particles do not fit {n_spin_orbitals} spin orbitals"
        )
    return n_spatial, n_alpha, n_beta


def hartree_fock_occupation(n_spin_orbitals: int, n_particles: int) -> np.ndarray:
    """Lowest orbitals of each spin block filled, block order (alpha..., beta...)."""
    n_spatial, n_alpha, n_beta = _spin_filling(n_spin_orbitals, n_particles)
    occupation = np.zeros(n_spin_orbitals, dtype=np.int64)
    occupation[:n_alpha] = 1
    occupation[n_spatial : n_spatial + n_beta] = 1
    return occupation


def _check_reduction(mapping: Mapping, reduced: bool) -> None:
    if reduced and mapping is not Mapping.PARITY:
        raise ConfigurationError(
            f"two-qubit reduction requires the parity mapping, got {mapping.value}"
        )


def hartree_fock_circuit(
    n_spin_orbitals: int,
    n_particles: int,
    mapping: Mapping | str,
    reduced: bool = False,
) -> Circuit:
    kind = parse_mapping(mapping)
    _check_reduction(kind, reduced)
    bits = encode_occupation(hartree_fock_occupation(n_spin_orbitals, n_particles), kind)
    if reduced:
        n_spatial = n_spin_orbitals // 2
        bits = np.delete(bits, [n_spatial - 1, n_spin_orbitals - 1])
    gates = tuple(Gate(GateKind.X, (int(q),)) for q in np.nonzero(bits)[0])
    return Circuit(int(bits.size), gates, 0)


def zero_state(n_qubits: int) -> Circuit:
    return Circuit(n_qubits)


def excitations(n_spin_orbitals: int, n_particles: int) -> ExcitationList:
    """Spin-conserving singles and doubles out of the Hartree-Fock filling."""
    n_spatial, _, _ = _spin_filling(n_spin_orbitals, n_particles)
    occupation = hartree_fock_occupation(n_spin_orbitals, n_particles)
    occupied = [p for p in range(n_spin_orbitals) if occupation[p]]
    virtual = [p for p in range(n_spin_orbitals) if not occupation[p]]

    def spin(p: int) -> int:
        return p // n_spatial

    singles = tuple((i, a) for i in occupied for a in virtual if spin(i) == spin(a))
    doubles = tuple(
        (i, j, a, b)
        for i, j in combinations(occupied, 2)
        for a, b in combinations(virtual, 2)
        if spin(i) + spin(j) == spin(a) + spin(b)
    )
    return ExcitationList(singles=singles, doubles=doubles)


def _excitation_generator(
    indices: Sequence[int],
    n_modes: int,
    mapping: Mapping,
) -> PauliSum:
    """Mapped ``T - T+`` for one single ``(i, a)`` or double ``(i, j, a, b)``."""
    if len(indices) == 2:
        i, a = indices
        excitation = creation_operator(a, n_modes, mapping) * annihilation_operator(i, n_modes, mapping)
    else:
        i, j, a, b = indices
        excitation = (
            creation_operator(a, n_modes, mapping)
            * creation_operator(b, n_modes, mapping)
            * annihilation_operator(j, n_modes, mapping)
            * annihilation_operator(i, n_modes, mapping)
        )
    return simplify(excitation - excitation.adjoint(), 1e-12)


def pauli_exponential(string: PauliString, parameter: ParameterRef) -> list[Gate]:
    """Gates for ``exp(-i phi P / 2)`` where ``phi`` is the referenced angle."""
    support = [q for q in range(string.n_qubits) if string.support >> q & 1]
    if not support:
        return []
    before: list[Gate] = []
    after: list[Gate] = []
    for q in support:
        letter = string.letter(q)
        if letter == "X":
            before.append(Gate(GateKind.H, (q,)))
            after.append(Gate(GateKind.H, (q,)))
        elif letter == "Y":
            before.extend([Gate(GateKind.SDG, (q,)), Gate(GateKind.H, (q,))])
            after.extend([Gate(GateKind.H, (q,)), Gate(GateKind.S, (q,))])
    ladder = [Gate(GateKind.CX, (support[k], support[k + 1])) for k in range(len(support) - 1)]
    rotation = Gate(GateKind.RZ, (support[-1],), parameter)
    return before + ladder + [rotation] + list(reversed(ladder)) + after


def uccsd(
    n_spin_orbitals: int,
    n_particles: int,
    mapping: Mapping | str,
    reduced: bool,
    depth: int,
    initial: Circuit,
) -> Circuit:
    """Trotterized ``exp(T - T+)``, one shared amplitude per excitation."""
    if depth < 1:
        raise ConfigurationError(f"depth must be at least 1, got {depth}")
    kind = parse_mapping(mapping)
    _check_reduction(kind, reduced)
    excitation_list = excitations(n_spin_orbitals, n_particles)
    if len(excitation_list) == 0:
        raise EmptyVariationalFormError(
            f"no excitations for {n_particles} particles in {n_spin_orbitals} spin orbitals"
        )

    n_qubits = n_spin_orbitals - 2 if reduced else n_spin_orbitals
    if initial.n_qubits != n_qubits:
        raise ConfigurationError(
            f"initial state has {initial.n_qubits} qubits, the form needs {n_qubits}"
        )

    blocks: list[list[Gate]] = []
    for slot, indices in enumerate(excitation_list.singles + excitation_list.doubles):
        generator = _excitation_generator(indices, n_spin_orbitals, kind)
        if reduced:
            generator = two_qubit_reduction(generator, n_particles, threshold=1e-12)
        gates: list[Gate] = []
        for term in generator.terms:
            # exp(theta * i r P) = exp(-i (2 theta (-r)) P / 2)
            r = term.coefficient.imag
            if abs(r) < 1e-12 or term.string.is_identity:
                continue
            parameter = ParameterRef(slot, sign=-1.0 if r > 0 else 1.0, multiplier=2.0 * abs(r))
            gates.extend(pauli_exponential(term.string, parameter))
        blocks.append(gates)

    body = tuple(gate for _ in range(depth) for block in blocks for gate in block)
    form = Circuit(n_qubits, body, len(excitation_list))
    logger.debug("UCCSD built: %d parameters, %d gates, depth %d", form.n_parameters, len(body), depth)
    return initial.compose(form)


def _layered_form(
    n_qubits: int,
    depth: int,
    initial: Circuit,
    rotations: Sequence[GateKind],
    entangler: GateKind,
) -> Circuit:
    if depth < 1:
        raise ConfigurationError(f"depth must be at least 1, got {depth}")
    if initial.n_qubits != n_qubits:
        raise ConfigurationError(
            f"initial state has {initial.n_qubits} qubits, the form needs {n_qubits}"
        )
    gates: list[Gate] = []
    slot = 0
    for layer in range(depth + 1):
        for rotation in rotations:
            for q in range(n_qubits):
                gates.append(Gate(rotation, (q,), ParameterRef(slot)))
                slot += 1
        if layer == depth:
            break
        for i, j in combinations(range(n_qubits), 2):
            if entangler is GateKind.XXPLUSYY:
                gates.append(Gate(entangler, (i, j), ParameterRef(slot)))
                slot += 1
            else:
                gates.append(Gate(entangler, (i, j)))
    return initial.compose(Circuit(n_qubits, tuple(gates), slot))


def real_amplitudes(n_qubits: int, depth: int, initial: Circuit) -> Circuit:
    return _layered_form(n_qubits, depth, initial, (GateKind.RY,), GateKind.CX)


def efficient_su2(n_qubits: int, depth: int, initial: Circuit) -> Circuit:
    return _layered_form(n_qubits, depth, initial, (GateKind.RY, GateKind.RZ), GateKind.CX)


def two_local_ry_rz_cz(n_qubits: int, depth: int, initial: Circuit) -> Circuit:
    return _layered_form(n_qubits, depth, initial, (GateKind.RY, GateKind.RZ), GateKind.CZ)


def excitation_preserving(n_qubits: int, depth: int, initial: Circuit) -> Circuit:
    """RZ layers with one ``XXPLUSYY`` angle per pair per entangling layer."""
    return _layered_form(n_qubits, depth, initial, (GateKind.RZ,), GateKind.XXPLUSYY)


def build_ansatz(
    var_form: VariationalForm | str,
    initial_state: InitialState | str,
    *,
    n_spin_orbitals: int,
    n_particles: int,
    mapping: Mapping | str,
    reduced: bool,
    depth: int = 1,
) -> Circuit:
    """Initial state followed by the chosen variational form."""
    form = VariationalForm(var_form)
    kind = parse_mapping(mapping)
    n_qubits = n_spin_orbitals - 2 if reduced else n_spin_orbitals
    if InitialState(initial_state) is InitialState.HARTREE_FOCK:
        initial = hartree_fock_circuit(n_spin_orbitals, n_particles, kind, reduced)
    else:
        initial = zero_state(n_qubits)

    if form is VariationalForm.UCCSD:
        return uccsd(n_spin_orbitals, n_particles, kind, reduced, depth, initial)
    builders = {
        VariationalForm.REAL_AMPLITUDES: real_amplitudes,
        VariationalForm.EFFICIENT_SU2: efficient_su2,
        VariationalForm.TWO_LOCAL: two_local_ry_rz_cz,
        VariationalForm.EXCITATION_PRESERVING: excitation_preserving,
    }
    return builders[form](n_qubits, depth, initial)


def random_initial_point(
    n_parameters: int,
    interval: Sequence[float] = (0.0, 1.0),
    *,
    rng: np.random.Generator | None = None,
    seed: int | None = None,
) -> np.ndarray:
    """Uniform draws on ``[lo, hi]``; a one-element interval ``[hi]`` means ``[0, hi]``."""
    bounds = [float(v) for v in interval]
    if not bounds:
        raise ConfigurationError("initial-point interval must not be empty")
    if len(bounds) == 1:
        bounds = [0.0, bounds[0]]
    if len(bounds) != 2:
        raise ConfigurationError(f"initial-point interval takes at most two values, got {bounds}")
    lo, hi = bounds
    if lo > hi:
        raise ConfigurationError(f"initial-point interval is reversed: [{lo}, {hi}]")
    generator = rng if rng is not None else np.random.default_rng(seed)
    if lo == hi:
        return np.full(n_parameters, lo)
    return generator.uniform(lo, hi, size=n_parameters)


__all__ = [
    "EmptyVariationalFormError",
    "ExcitationList",
    "InitialState",
    "VariationalForm",
    "build_ansatz",
    "efficient_su2",
    "excitation_preserving",
    "excitations",
    "hartree_fock_circuit",
    "hartree_fock_occupation",
    "pauli_exponential",
    "random_initial_point",
    "real_amplitudes",
    "two_local_ry_rz_cz",
    "uccsd",
    "zero_state",
]
