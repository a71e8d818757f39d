"""Gate-level circuit value types with symbolic parameter slots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from vqe.core.errors import ConfigurationError


class CircuitValidationError(ConfigurationError):
    """Raised for malformed gates or circuits."""


class BindingError(ConfigurationError):
    """Raised when parameter values do not fit a circuit's slots."""


class GateKind(str, Enum):
    X = "X"
    H = "H"
    S = "S"
    SDG = "SDG"
    RX = "RX"
    RY = "RY"
    RZ = "RZ"
    CX = "CX"
    CZ = "CZ"
    XXPLUSYY = "XXPLUSYY"


TWO_QUBIT_KINDS = frozenset({GateKind.CX, GateKind.CZ, GateKind.XXPLUSYY})
ROTATION_KINDS = frozenset({GateKind.RX, GateKind.RY, GateKind.RZ, GateKind.XXPLUSYY})


@dataclass(frozen=True, slots=True)
class ParameterRef:
    """Angle ``sign * multiplier * theta[slot]``."""

    slot: int
    sign: float = 1.0
    multiplier: float = 1.0

    def __post_init__(self) -> None:
        if self.slot < 0:
            raise CircuitValidationError(f"parameter slot must be non-negative, got {self.slot}")
        if self.sign not in (1.0, -1.0):
            raise CircuitValidationError(f"parameter sign must be +1 or -1, got {self.sign}")

    @property
    def factor(self) -> float:
        return self.sign * self.multiplier

    def resolve(self, values: np.ndarray) -> float:
        return self.factor * float(values[self.slot])

    def shifted(self, offset: int) -> "ParameterRef":
        return ParameterRef(self.slot + offset, self.sign, self.multiplier)


@dataclass(frozen=True, slots=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]
    angle: float | ParameterRef | None = None

    def __post_init__(self) -> None:
        arity = 2 if self.kind in TWO_QUBIT_KINDS else 1
        if len(self.qubits) != arity:
            raise CircuitValidationError(
                f"{self.kind.value} acts on {arity} qubit(s), got {self.qubits}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise CircuitValidationError(f"{self.kind.value} qubits must be distinct: {self.qubits}")
        if self.kind in ROTATION_KINDS:
            if self.angle is None:
                raise CircuitValidationError(f"{self.kind.value} needs an angle")
            if not isinstance(self.angle, ParameterRef) and not math.isfinite(self.angle):
                raise CircuitValidationError(f"{self.kind.value} angle must be finite")
        elif self.angle is not None:
            raise CircuitValidationError(f"{self.kind.value} takes no angle")

    @property
    def is_parameterized(self) -> bool:
        return isinstance(self.angle, ParameterRef)

    def describe(self) -> str:
        qubits = ",".join(str(q) for q in self.qubits)
        if self.angle is None:
            angle = "-"
        elif isinstance(self.angle, ParameterRef):
            factor = self.angle.factor
            slot = f"p[{self.angle.slot}]"
            angle = slot if factor == 1.0 else f"{factor!r}*{slot}"
        else:
            angle = repr(float(self.angle))
        return f"{self.kind.value} {qubits} {angle}"


@dataclass(frozen=True, slots=True)
class Circuit:
    n_qubits: int
    gates: tuple[Gate, ...] = ()
    n_parameters: int = 0

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise CircuitValidationError(f"a circuit needs at least one qubit, got {self.n_qubits}")
        referenced: set[int] = set()
        for gate in self.gates:
            for q in gate.qubits:
                if not 0 <= q < self.n_qubits:
                    raise CircuitValidationError(
                        f"gate {gate.describe()} touches qubit {q} outside [0, {self.n_qubits})"
                    )
            if isinstance(gate.angle, ParameterRef):
                if gate.angle.slot >= self.n_parameters:
                    raise CircuitValidationError(
                        f"gate {gate.describe()} references a slot beyond {self.n_parameters}"
                    )
                referenced.add(gate.angle.slot)
        missing = set(range(self.n_parameters)) - referenced
        if missing:
            raise CircuitValidationError(f"parameter slots {sorted(missing)} are never used")

    def compose(self, other: "Circuit") -> "Circuit":
        """Append ``other``; its parameter slots follow this circuit's."""
        if other.n_qubits != self.n_qubits:
            raise CircuitValidationError(
                f"cannot compose circuits on {self.n_qubits} and {other.n_qubits} qubits"
            )
        offset = self.n_parameters
        shifted = tuple(
            Gate(g.kind, g.qubits, g.angle.shifted(offset)) if isinstance(g.angle, ParameterRef) else g
            for g in other.gates
        )
        return Circuit(self.n_qubits, self.gates + shifted, self.n_parameters + other.n_parameters)

    def bind(self, values: Sequence[float] | np.ndarray) -> "Circuit":
        """Return a parameter-free copy with every slot resolved."""
        array = np.asarray(values, dtype=float).reshape(-1)
        if array.size != self.n_parameters:
            raise BindingError(
                f"circuit has {self.n_parameters} parameters, got {array.size} values"
            )
        if not np.all(np.isfinite(array)):
            raise BindingError("parameter values must be finite")
        bound = tuple(
            Gate(g.kind, g.qubits, g.angle.resolve(array)) if isinstance(g.angle, ParameterRef) else g
            for g in self.gates
        )
        return Circuit(self.n_qubits, bound, 0)

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)

    def to_text(self) -> str:
        """Debug dump, one gate per line: ``<kind> <qubits> <angle|p[k]>``."""
        return "".join(f"{gate.describe()}\n" for gate in self.gates)

    def __len__(self) -> int:
        return len(self.gates)


__all__ = [
    "BindingError",
    "Circuit",
    "CircuitValidationError",
    "Gate",
    "GateKind",
    "ParameterRef",
    "ROTATION_KINDS",
    "TWO_QUBIT_KINDS",
]
