"""Classical optimizers over the energy objective."""

from .base import (
    IterationRecord,
    NonFiniteObjectiveError,
    Objective,
    ObjectiveDimensionError,
    OptimizerKind,
    OptResult,
)
from .bfgs import bfgs_fd, central_difference_gradient
from .nelder_mead import nelder_mead
from .spsa import spsa

__all__ = [
    "IterationRecord",
    "NonFiniteObjectiveError",
    "Objective",
    "ObjectiveDimensionError",
    "OptResult",
    "OptimizerKind",
    "bfgs_fd",
    "central_difference_gradient",
    "nelder_mead",
    "spsa",
]
