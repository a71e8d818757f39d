"""Shared result type and protocol for the quantum-instance clients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np

from vqe.circuits.circuit import Circuit


@dataclass(frozen=True, slots=True)
class ExpectationEstimate:
    """Energy estimate in Hartree; ``shots_used`` is 0 for exact evaluation."""

    value: float
    stddev: float = 0.0
    shots_used: int = 0


class EnergyClient(Protocol):
    name: str

    def estimate(self, circuit: Circuit, parameters: Sequence[float] | np.ndarray) -> ExpectationEstimate:
        ...


__all__ = ["EnergyClient", "ExpectationEstimate"]
