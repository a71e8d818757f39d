"""Quantum instances: exact statevector and shot-sampled estimation."""

from .base import EnergyClient, ExpectationEstimate
from .sampler import SamplerClient, expectation_sampled, sample_counts
from .statevector import (
    StateVector,
    StatevectorClient,
    circuit_unitary,
    expectation_exact,
    gate_matrix,
    simulate,
)

__all__ = [
    "EnergyClient",
    "ExpectationEstimate",
    "SamplerClient",
    "StateVector",
    "StatevectorClient",
    "circuit_unitary",
    "expectation_exact",
    "expectation_sampled",
    "gate_matrix",
    "sample_counts",
    "simulate",
]
