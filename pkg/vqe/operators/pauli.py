"""
Weighted Pauli strings in the symplectic bitmask representation.

A string on ``n`` qubits is a pair of integers ``(x_mask, z_mask)``; bit ``q``
of each mask encodes the letter on qubit ``q`` as I=00, Z=01, X=10, Y=11 in
``(x, z)`` order. The string stands for ``i^{|x & z|} X^x Z^z`` so that Y is
the usual Hermitian Pauli-Y. Qubit 0 is the least-significant bit of every
basis-state index.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from vqe.core.errors import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 1e-8
MAX_DENSE_QUBITS = 12

_LETTER_BITS = {"I": (0, 0), "Z": (0, 1), "X": (1, 0), "Y": (1, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}
_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


class PauliDimensionError(ConfigurationError):
    """Raised when Pauli objects on different qubit counts are combined."""


class PauliResourceError(ConfigurationError):
    """Raised when a dense realization would exceed the qubit cap."""


@dataclass(frozen=True, slots=True)
class PauliString:
    n_qubits: int
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self) -> None:
        if self.n_qubits < 0:
            raise PauliDimensionError(f"qubit count must be non-negative, got {self.n_qubits}")
        limit = 1 << self.n_qubits
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise PauliDimensionError(
                f"masks ({self.x_mask:#x}, {self.z_mask:#x}) exceed {self.n_qubits} qubits"
            )

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliString":
        return cls(n_qubits)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse letters with qubit 0 leftmost, e.g. ``"XIZ"`` is X0 Z2."""
        x_mask = z_mask = 0
        for q, letter in enumerate(label.upper()):
            try:
                x_bit, z_bit = _LETTER_BITS[letter]
            except KeyError as exc:
                raise ConfigurationError(f"invalid Pauli letter {letter!r} in {label!r}") from exc
            x_mask |= x_bit << q
            z_mask |= z_bit << q
        return cls(len(label), x_mask, z_mask)

    @classmethod
    def single(cls, n_qubits: int, qubit: int, letter: str) -> "PauliString":
        x_bit, z_bit = _LETTER_BITS[letter]
        return cls(n_qubits, x_bit << qubit, z_bit << qubit)

    @property
    def label(self) -> str:
        return "".join(self.letter(q) for q in range(self.n_qubits))

    @property
    def support(self) -> int:
        return self.x_mask | self.z_mask

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    @property
    def is_identity(self) -> bool:
        return self.support == 0

    def letter(self, qubit: int) -> str:
        return _BITS_LETTER[((self.x_mask >> qubit) & 1, (self.z_mask >> qubit) & 1)]

    def sort_key(self) -> tuple[int, int]:
        return (self.z_mask, self.x_mask)

    def to_matrix(self) -> np.ndarray:
        return PauliSum.from_strings([self]).to_matrix()

    def __str__(self) -> str:
        return self.label


def multiply(a: PauliString, b: PauliString) -> tuple[complex, PauliString]:
    """Return ``(phase, product)`` with ``phase * product`` equal to ``a @ b``."""
    if a.n_qubits != b.n_qubits:
        raise PauliDimensionError(
            f"cannot multiply strings on {a.n_qubits} and {b.n_qubits} qubits"
        )
    x = a.x_mask ^ b.x_mask
    z = a.z_mask ^ b.z_mask
    exponent = (
        (a.x_mask & a.z_mask).bit_count()
        + (b.x_mask & b.z_mask).bit_count()
        + 2 * (a.z_mask & b.x_mask).bit_count()
        - (x & z).bit_count()
    )
    return _I_POWERS[exponent % 4], PauliString(a.n_qubits, x, z)


def z_parity(indices: np.ndarray, mask: int) -> np.ndarray:
    """Parity (0/1) of the bits of every index selected by ``mask``."""
    parity = np.zeros_like(indices)
    remaining = mask
    while remaining:
        low = remaining & -remaining
        parity ^= (indices & low) != 0
        remaining ^= low
    return parity


@dataclass(frozen=True, slots=True)
class PauliTerm:
    coefficient: complex
    string: PauliString

    def __post_init__(self) -> None:
        if not cmath.isfinite(self.coefficient):
            raise ConfigurationError(f"Pauli coefficient must be finite, got {self.coefficient}")


class PauliSum:
    """Immutable weighted sum of Pauli strings on a fixed number of qubits."""

    __slots__ = ("_n_qubits", "_terms")

    def __init__(self, n_qubits: int, terms: Iterable[PauliTerm] = ()) -> None:
        collected = tuple(terms)
        for term in collected:
            if term.string.n_qubits != n_qubits:
                raise PauliDimensionError(
                    f"term {term.string.label} does not act on {n_qubits} qubits"
                )
        self._n_qubits = n_qubits
        self._terms = collected

    # -- construction -------------------------------------------------------

    @classmethod
    def from_strings(
        cls,
        strings: Iterable[PauliString],
        coefficients: Iterable[complex] | None = None,
    ) -> "PauliSum":
        strings = list(strings)
        if not strings:
            raise PauliDimensionError("from_strings needs at least one string")
        weights = [1.0] * len(strings) if coefficients is None else list(coefficients)
        return cls(
            strings[0].n_qubits,
            (PauliTerm(complex(c), s) for c, s in zip(weights, strings)),
        )

    @classmethod
    def from_labels(cls, pairs: Iterable[tuple[complex, str]]) -> "PauliSum":
        pairs = list(pairs)
        if not pairs:
            raise PauliDimensionError("from_labels needs at least one term")
        return cls.from_strings(
            (PauliString.from_label(label) for _, label in pairs),
            (c for c, _ in pairs),
        )

    @classmethod
    def identity(cls, n_qubits: int, coefficient: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, [PauliTerm(complex(coefficient), PauliString.identity(n_qubits))])

    @classmethod
    def zero(cls, n_qubits: int) -> "PauliSum":
        return cls(n_qubits)

    # -- accessors ----------------------------------------------------------

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    @property
    def terms(self) -> tuple[PauliTerm, ...]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[PauliTerm]:
        return iter(self._terms)

    def __repr__(self) -> str:
        body = " + ".join(f"({t.coefficient:.6g})*{t.string.label}" for t in self._terms[:6])
        more = " + ..." if len(self._terms) > 6 else ""
        return f"PauliSum(n_qubits={self._n_qubits}, {body or '0'}{more})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self._n_qubits == other._n_qubits and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def identity_coefficient(self) -> complex:
        return sum(
            (t.coefficient for t in self._terms if t.string.is_identity),
            start=0j,
        )

    # -- algebra ------------------------------------------------------------

    def _check(self, other: "PauliSum") -> None:
        if other._n_qubits != self._n_qubits:
            raise PauliDimensionError(
                f"cannot combine sums on {self._n_qubits} and {other._n_qubits} qubits"
            )

    def __add__(self, other: "PauliSum") -> "PauliSum":
        self._check(other)
        return PauliSum(self._n_qubits, self._terms + other._terms)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + other.scale(-1.0)

    def __neg__(self) -> "PauliSum":
        return self.scale(-1.0)

    def scale(self, factor: complex) -> "PauliSum":
        return PauliSum(
            self._n_qubits,
            (PauliTerm(t.coefficient * factor, t.string) for t in self._terms),
        )

    def __mul__(self, other: "PauliSum | complex | float") -> "PauliSum":
        if not isinstance(other, PauliSum):
            return self.scale(other)
        self._check(other)
        products = []
        for left in self._terms:
            for right in other._terms:
                phase, string = multiply(left.string, right.string)
                products.append(PauliTerm(left.coefficient * right.coefficient * phase, string))
        return PauliSum(self._n_qubits, products)

    def __rmul__(self, other: complex | float) -> "PauliSum":
        return self.scale(other)

    def adjoint(self) -> "PauliSum":
        """Every string is Hermitian, so only the coefficients conjugate."""
        return PauliSum(
            self._n_qubits,
            (PauliTerm(t.coefficient.conjugate(), t.string) for t in self._terms),
        )

    def simplify(self, threshold: float = DEFAULT_THRESHOLD) -> "PauliSum":
        return simplify(self, threshold)

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        return is_hermitian(self, tol)

    def to_matrix(self) -> np.ndarray:
        return to_matrix(self)

    def real_coefficients(self) -> "PauliSum":
        """Drop imaginary parts; only meaningful after a Hermiticity check."""
        return PauliSum(
            self._n_qubits,
            (PauliTerm(complex(t.coefficient.real, 0.0), t.string) for t in self._terms),
        )

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        """One term per line: ``<re> <im> <letters>``, qubit 0 leftmost."""
        lines = [
            f"{t.coefficient.real!r} {t.coefficient.imag!r} {t.string.label}"
            for t in self._terms
        ]
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str, n_qubits: int | None = None) -> "PauliSum":
        terms: list[PauliTerm] = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ConfigurationError(f"line {line_number}: expected '<re> <im> <letters>'")
            string = PauliString.from_label(parts[2])
            terms.append(PauliTerm(complex(float(parts[0]), float(parts[1])), string))
        if n_qubits is None:
            if not terms:
                raise ConfigurationError("cannot infer the qubit count of an empty sum")
            n_qubits = terms[0].string.n_qubits
        return cls(n_qubits, terms)


def simplify(pauli_sum: PauliSum, threshold: float = DEFAULT_THRESHOLD) -> PauliSum:
    """Merge like strings, drop ``|c| < threshold`` and sort by ``(z_mask, x_mask)``."""
    if threshold < 0.0:
        raise ConfigurationError(f"threshold must be non-negative, got {threshold}")
    merged: dict[PauliString, complex] = {}
    for term in pauli_sum.terms:
        merged[term.string] = merged.get(term.string, 0j) + term.coefficient
    kept = [
        PauliTerm(coefficient, string)
        for string, coefficient in merged.items()
        if abs(coefficient) >= threshold and coefficient != 0
    ]
    kept.sort(key=lambda term: term.string.sort_key())
    return PauliSum(pauli_sum.n_qubits, kept)


def is_hermitian(pauli_sum: PauliSum, tol: float = 1e-10) -> bool:
    return all(abs(t.coefficient.imag) < tol for t in simplify(pauli_sum, 0.0).terms)


def to_matrix(pauli_sum: PauliSum) -> np.ndarray:
    """Dense ``2^n x 2^n`` realization; qubit 0 is the least-significant index bit."""
    n = pauli_sum.n_qubits
    if n > MAX_DENSE_QUBITS:
        raise PauliResourceError(
            f"dense realization is capped at {MAX_DENSE_QUBITS} qubits, got {n}"
        )
    dim = 1 << n
    columns = np.arange(dim)
    matrix = np.zeros((dim, dim), dtype=complex)
    for term in pauli_sum.terms:
        x, z = term.string.x_mask, term.string.z_mask
        phase = _I_POWERS[(x & z).bit_count() % 4]
        signs = 1.0 - 2.0 * z_parity(columns, z)
        matrix[columns ^ x, columns] += term.coefficient * phase * signs
    return matrix


__all__ = [
    "DEFAULT_THRESHOLD",
    "MAX_DENSE_QUBITS",
    "PauliDimensionError",
    "PauliResourceError",
    "PauliString",
    "PauliSum",
    "PauliTerm",
    "is_hermitian",
    "multiply",
    "simplify",
    "to_matrix",
    "z_parity",
]
