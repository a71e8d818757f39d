"""Numerical and seeding helpers shared across modules."""

from .linalg import EigensolverError, hermitian_eigh, jacobi_eigh, symmetric_eigh_2x2
from .seeding import derive_seed, make_rng

__all__ = [
    "EigensolverError",
    "derive_seed",
    "hermitian_eigh",
    "jacobi_eigh",
    "make_rng",
    "symmetric_eigh_2x2",
]
