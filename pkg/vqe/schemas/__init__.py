"""Public schema exports."""

from .vqe import (
    BackendKind,
    InitialPointKind,
    PauliTermDump,
    QubitHamiltonianDump,
    ScanFailure,
    ScanPoint,
    ScanResult,
    TraceEntry,
    VqeConfig,
    VqeResult,
)

__all__ = [
    "BackendKind",
    "InitialPointKind",
    "PauliTermDump",
    "QubitHamiltonianDump",
    "ScanFailure",
    "ScanPoint",
    "ScanResult",
    "TraceEntry",
    "VqeConfig",
    "VqeResult",
]
