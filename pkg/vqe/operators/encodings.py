"""
Fermion-to-qubit encodings expressed as GF(2) encoding matrices.

Each encoding stores the occupation vector ``n`` as qubit values ``q = B n``
(mod 2): the identity for Jordan-Wigner, prefix sums for parity and the
Fenwick tree for Bravyi-Kitaev. The update, parity and flip index sets used
to realize ladder operators are all read off ``B`` and its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from vqe.core.errors import ConfigurationError
from vqe.operators.pauli import PauliString, PauliSum, PauliTerm

MAX_MODES = 12


class UnknownMappingError(ConfigurationError):
    """Raised for a mapping tag outside the supported encodings."""


class Mapping(str, Enum):
    JORDAN_WIGNER = "jordan_wigner"
    PARITY = "parity"
    BRAVYI_KITAEV = "bravyi_kitaev"


def parse_mapping(value: "Mapping | str") -> Mapping:
    if isinstance(value, Mapping):
        return value
    try:
        return Mapping(str(value).strip().lower())
    except ValueError as exc:
        choices = ", ".join(m.value for m in Mapping)
        raise UnknownMappingError(f"unknown mapping {value!r}; expected one of {choices}") from exc


def encoding_matrix(n_modes: int, mapping: "Mapping | str") -> np.ndarray:
    """Lower-triangular 0/1 matrix ``B`` with ``q = B n`` over GF(2)."""
    kind = parse_mapping(mapping)
    if not 1 <= n_modes <= MAX_MODES:
        raise ConfigurationError(f"mode count must be in [1, {MAX_MODES}], got {n_modes}")
    if kind is Mapping.JORDAN_WIGNER:
        return np.eye(n_modes, dtype=np.uint8)
    if kind is Mapping.PARITY:
        return np.tril(np.ones((n_modes, n_modes), dtype=np.uint8))
    matrix = np.zeros((n_modes, n_modes), dtype=np.uint8)
    for j in range(n_modes):
        # Fenwick node j covers occupations (j & (j + 1)) .. j.
        matrix[j, j & (j + 1) : j + 1] = 1
    return matrix


def gf2_inverse(matrix: np.ndarray) -> np.ndarray:
    """Inverse over GF(2) by Gauss-Jordan elimination."""
    n = matrix.shape[0]
    work = np.concatenate([matrix.astype(np.uint8) % 2, np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        pivots = np.nonzero(work[col:, col])[0]
        if pivots.size == 0:
            raise ConfigurationError("encoding matrix is singular over GF(2)")
        pivot = col + int(pivots[0])
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        for row in range(n):
            if row != col and work[row, col]:
                work[row] ^= work[col]
    return work[:, n:]


@dataclass(frozen=True, slots=True)
class LadderSets:
    """Qubit index sets for one mode: update ``U``, parity ``P`` and flip ``F``."""

    update: tuple[int, ...]
    parity: tuple[int, ...]
    flip: tuple[int, ...]


@lru_cache(maxsize=None)
def ladder_sets(n_modes: int, mapping: Mapping) -> tuple[LadderSets, ...]:
    beta = encoding_matrix(n_modes, mapping)
    beta_inv = gf2_inverse(beta)
    result = []
    for p in range(n_modes):
        update = tuple(int(j) for j in range(n_modes) if j != p and beta[j, p])
        prefix = np.zeros(n_modes, dtype=np.int64)
        prefix[:p] = 1
        parity_row = (prefix @ beta_inv.astype(np.int64)) % 2
        parity = tuple(int(j) for j in np.nonzero(parity_row)[0])
        flip = tuple(int(j) for j in range(n_modes) if j != p and beta_inv[p, j])
        result.append(LadderSets(update=update, parity=parity, flip=flip))
    return tuple(result)


def _mask(indices: tuple[int, ...] | set[int]) -> int:
    value = 0
    for index in indices:
        value |= 1 << index
    return value


@lru_cache(maxsize=None)
def creation_operator(mode: int, n_modes: int, mapping: Mapping) -> PauliSum:
    """``a+_p = 1/2 X_U (X_p Z_P - i Y_p Z_(P xor F))``."""
    if not 0 <= mode < n_modes:
        raise ConfigurationError(f"mode {mode} outside [0, {n_modes})")
    sets = ladder_sets(n_modes, parse_mapping(mapping))[mode]
    x_mask = _mask(sets.update) | (1 << mode)
    parity = _mask(sets.parity)
    remainder = parity ^ _mask(sets.flip)
    return PauliSum(
        n_modes,
        [
            PauliTerm(0.5 + 0j, PauliString(n_modes, x_mask, parity)),
            PauliTerm(-0.5j, PauliString(n_modes, x_mask, remainder | (1 << mode))),
        ],
    )


@lru_cache(maxsize=None)
def annihilation_operator(mode: int, n_modes: int, mapping: Mapping) -> PauliSum:
    return creation_operator(mode, n_modes, mapping).adjoint()


def encode_occupation(occupation: list[int] | np.ndarray, mapping: "Mapping | str") -> np.ndarray:
    """Qubit bit values that encode an occupation-number vector."""
    occ = np.asarray(occupation, dtype=np.int64) % 2
    beta = encoding_matrix(occ.size, mapping).astype(np.int64)
    return (beta @ occ) % 2


__all__ = [
    "LadderSets",
    "MAX_MODES",
    "Mapping",
    "UnknownMappingError",
    "annihilation_operator",
    "creation_operator",
    "encode_occupation",
    "encoding_matrix",
    "gf2_inverse",
    "ladder_sets",
    "parse_mapping",
]
