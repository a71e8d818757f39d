"""
Second-quantized molecular Hamiltonian and its qubit images.

``H = sum h1[p,q] a+_p a_q + 1/2 sum h2[p,q,r,s] a+_p a+_q a_s a_r`` with
``h2`` in physicist notation. The nuclear-repulsion energy never enters the
operator; it travels alongside as ``shift``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

import numpy as np

from vqe.chemistry.integrals import SpinOrbitalIntegrals
from vqe.core.errors import ConfigurationError
from vqe.operators.encodings import (
    MAX_MODES,
    Mapping,
    annihilation_operator,
    creation_operator,
    parse_mapping,
)
from vqe.operators.pauli import (
    DEFAULT_THRESHOLD,
    PauliString,
    PauliSum,
    PauliTerm,
    is_hermitian,
    multiply,
    simplify,
)

logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-10


class FermionValidationError(ConfigurationError):
    """Raised when integral tensors break the symmetries a Hermitian H needs."""


class SymmetryError(ConfigurationError):
    """Raised when a two-qubit reduction is requested on an incompatible operator."""


class HamiltonianValidationError(ConfigurationError):
    """Raised when a qubit Hamiltonian is not Hermitian."""


@dataclass(frozen=True, slots=True, eq=False)
class FermionicOperator:
    h1: np.ndarray
    h2: np.ndarray
    n_modes: int

    def __post_init__(self) -> None:
        n = self.n_modes
        if self.h1.shape != (n, n) or self.h2.shape != (n, n, n, n):
            raise FermionValidationError(
                f"tensor shapes {self.h1.shape}, {self.h2.shape} do not match {n} modes"
            )
        if not np.allclose(self.h1, self.h1.T, atol=SYMMETRY_TOLERANCE, rtol=0.0):
            raise FermionValidationError("one-body tensor is not symmetric")
        # Particle exchange and Hermiticity of <pq|rs>.
        for axes in ((1, 0, 3, 2), (2, 3, 0, 1)):
            if not np.allclose(self.h2, self.h2.transpose(axes), atol=SYMMETRY_TOLERANCE, rtol=0.0):
                raise FermionValidationError(f"two-body tensor breaks symmetry {axes}")


def build_fermionic(ints: SpinOrbitalIntegrals) -> FermionicOperator:
    return FermionicOperator(
        h1=np.asarray(ints.h1, dtype=float),
        h2=np.asarray(ints.h2, dtype=float),
        n_modes=ints.n_spin_orbitals,
    )


class _Accumulator:
    """Running sum of Pauli terms keyed by string."""

    def __init__(self, n_qubits: int) -> None:
        self.n_qubits = n_qubits
        self.weights: dict[PauliString, complex] = {}

    def add_product(self, coefficient: complex, left: PauliSum, right: PauliSum) -> None:
        for a in left.terms:
            for b in right.terms:
                phase, string = multiply(a.string, b.string)
                value = coefficient * a.coefficient * b.coefficient * phase
                self.weights[string] = self.weights.get(string, 0j) + value

    def to_sum(self, threshold: float) -> PauliSum:
        terms = (PauliTerm(c, s) for s, c in self.weights.items())
        return simplify(PauliSum(self.n_qubits, terms), threshold)


def map_fermionic(
    op: FermionicOperator,
    mapping: Mapping | str,
    *,
    threshold: float = DEFAULT_THRESHOLD,
) -> PauliSum:
    """Map the operator onto qubits with the chosen encoding."""
    kind = parse_mapping(mapping)
    n = op.n_modes
    if n > MAX_MODES:
        raise ConfigurationError(f"at most {MAX_MODES} modes can be mapped, got {n}")
    create = [creation_operator(p, n, kind) for p in range(n)]
    destroy = [annihilation_operator(p, n, kind) for p in range(n)]

    acc = _Accumulator(n)
    for p, q in product(range(n), repeat=2):
        if op.h1[p, q] != 0.0:
            acc.add_product(op.h1[p, q], create[p], destroy[q])

    pair_create: dict[tuple[int, int], PauliSum] = {}
    pair_destroy: dict[tuple[int, int], PauliSum] = {}
    for p, q in product(range(n), repeat=2):
        if p != q:
            pair_create[p, q] = simplify(create[p] * create[q], 0.0)
            pair_destroy[p, q] = simplify(destroy[p] * destroy[q], 0.0)
    for p, q, r, s in product(range(n), repeat=4):
        value = op.h2[p, q, r, s]
        # a+_p a+_p and a_s a_s vanish identically.
        if value == 0.0 or p == q or r == s:
            continue
        acc.add_product(0.5 * value, pair_create[p, q], pair_destroy[s, r])

    mapped = acc.to_sum(threshold)
    logger.debug("Fermionic operator mapped with %s: %d terms", kind.value, len(mapped))
    return mapped


def number_operator(n_modes: int, mapping: Mapping | str) -> PauliSum:
    """Total particle number ``sum_p a+_p a_p`` under an encoding."""
    kind = parse_mapping(mapping)
    acc = _Accumulator(n_modes)
    for p in range(n_modes):
        acc.add_product(1.0, creation_operator(p, n_modes, kind), annihilation_operator(p, n_modes, kind))
    return acc.to_sum(0.0)


def _delete_bits(mask: int, qubits: tuple[int, ...]) -> int:
    for qubit in sorted(qubits, reverse=True):
        low = mask & ((1 << qubit) - 1)
        mask = low | ((mask >> (qubit + 1)) << qubit)
    return mask


def two_qubit_reduction(
    pauli_sum: PauliSum,
    n_particles: int,
    *,
    n_alpha: int | None = None,
    threshold: float = DEFAULT_THRESHOLD,
) -> PauliSum:
    """Drop the two parity-encoded symmetry qubits of a parity-mapped operator.

    Qubit ``n/2 - 1`` holds the alpha-number parity and qubit ``n - 1`` the
    total parity; their Z operators are replaced by the sector eigenvalues.
    """
    n = pauli_sum.n_qubits
    if n < 2 or n % 2:
        raise SymmetryError(f"two-qubit reduction needs an even qubit count, got {n}")
    alpha = n_particles // 2 if n_alpha is None else n_alpha
    alpha_qubit, total_qubit = n // 2 - 1, n - 1
    alpha_sign = -1.0 if alpha % 2 else 1.0
    total_sign = -1.0 if n_particles % 2 else 1.0
    symmetry_mask = (1 << alpha_qubit) | (1 << total_qubit)

    reduced: list[PauliTerm] = []
    for term in pauli_sum.terms:
        string = term.string
        if string.x_mask & symmetry_mask:
            raise SymmetryError(
                f"term {string.label} acts with X or Y on a symmetry qubit"
            )
        coefficient = term.coefficient
        if string.z_mask >> alpha_qubit & 1:
            coefficient *= alpha_sign
        if string.z_mask >> total_qubit & 1:
            coefficient *= total_sign
        removed = (alpha_qubit, total_qubit)
        reduced.append(
            PauliTerm(
                coefficient,
                PauliString(
                    n - 2,
                    _delete_bits(string.x_mask, removed),
                    _delete_bits(string.z_mask, removed),
                ),
            )
        )
    return simplify(PauliSum(n - 2, reduced), threshold)


@dataclass(frozen=True, slots=True, eq=False)
class QubitHamiltonian:
    pauli_sum: PauliSum
    n_qubits: int
    shift: float
    n_particles: int
    mapping: Mapping
    reduced: bool = False

    def __post_init__(self) -> None:
        if self.pauli_sum.n_qubits != self.n_qubits:
            raise HamiltonianValidationError("qubit count does not match the Pauli sum")
        if not is_hermitian(self.pauli_sum, 1e-10):
            raise HamiltonianValidationError("qubit Hamiltonian is not Hermitian")
        if self.reduced and self.mapping is not Mapping.PARITY:
            raise SymmetryError("only parity-mapped Hamiltonians carry a two-qubit reduction")

    @property
    def mapping_tag(self) -> str:
        return self.mapping.value

    def as_dict(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "shift": self.shift,
            "n_particles": self.n_particles,
            "mapping_tag": self.mapping.value,
            "reduced": self.reduced,
            "terms": [
                {
                    "label": t.string.label,
                    "real": t.coefficient.real,
                    "imag": t.coefficient.imag,
                }
                for t in self.pauli_sum.terms
            ],
        }


def qubit_hamiltonian(
    ints: SpinOrbitalIntegrals,
    mapping: Mapping | str,
    *,
    tqr: bool = False,
    threshold: float = DEFAULT_THRESHOLD,
) -> QubitHamiltonian:
    """Fermionic assembly, mapping and optional reduction in one call."""
    kind = parse_mapping(mapping)
    if tqr and kind is not Mapping.PARITY:
        raise SymmetryError(
            f"two-qubit reduction is only defined for the parity mapping, got {kind.value}"
        )
    fermionic = build_fermionic(ints)
    logger.debug("One-body integrals:\n%s", np.array2string(fermionic.h1, precision=8))
    logger.debug("Two-body integrals:\n%s", np.array2string(fermionic.h2, precision=8))

    mapped = map_fermionic(fermionic, kind, threshold=threshold)
    logger.debug("Qubit operator (%d terms):\n%s", len(mapped), mapped.to_text())
    if tqr:
        mapped = two_qubit_reduction(mapped, ints.n_particles, n_alpha=ints.n_alpha, threshold=threshold)
        logger.debug("Qubit operator after reduction (%d terms):\n%s", len(mapped), mapped.to_text())
    if not is_hermitian(mapped, 1e-10):
        raise HamiltonianValidationError("mapped Hamiltonian has complex coefficients")

    hamiltonian = QubitHamiltonian(
        pauli_sum=mapped.real_coefficients(),
        n_qubits=mapped.n_qubits,
        shift=ints.nuclear_repulsion,
        n_particles=ints.n_particles,
        mapping=kind,
        reduced=tqr,
    )
    logger.info(
        "Qubit Hamiltonian ready: mapping=%s reduced=%s qubits=%d terms=%d",
        kind.value,
        tqr,
        hamiltonian.n_qubits,
        len(mapped),
    )
    return hamiltonian


__all__ = [
    "FermionValidationError",
    "FermionicOperator",
    "HamiltonianValidationError",
    "QubitHamiltonian",
    "SymmetryError",
    "build_fermionic",
    "map_fermionic",
    "number_operator",
    "qubit_hamiltonian",
    "two_qubit_reduction",
]
