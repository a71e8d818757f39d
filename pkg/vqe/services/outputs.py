"""Result, trace, curve and artifact writers."""

from __future__ import annotations

import csv
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from vqe.circuits.circuit import Circuit
from vqe.core.errors import ConfigurationError
from vqe.operators.fermion import QubitHamiltonian
from vqe.schemas.vqe import QubitHamiltonianDump, ScanResult, TraceEntry, VqeResult

logger = logging.getLogger(__name__)

TRACE_PREFIX = ("nfev", "energy", "stddev")
SCAN_HEADER = ("distance_angstrom", "vqe_total_ha", "reference_total_ha", "nfev")


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class OutputWriteError(ConfigurationError):
    """Raised when a result file cannot be written."""

    def __init__(self, path: Path | str, reason: str) -> None:
        super().__init__(f"cannot write {path}: {reason}", stage="output")
        self.path = Path(path)


def format_float(value: float) -> str:
    return format(value, ".12g")


def _write_text(path: Path | str, text: str) -> Path:
    target = Path(path)
    try:
        if target.parent and not target.parent.exists():
            target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OutputWriteError(target, exc.strerror or str(exc)) from exc
    logger.info("Output written to %s (%d bytes)", target, len(text))
    return target


def _write_rows(path: Path | str, header: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
    target = Path(path)
    try:
        if target.parent and not target.parent.exists():
            target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        raise OutputWriteError(target, exc.strerror or str(exc)) from exc
    logger.info("Output written to %s", target)
    return target


def write_result_json(result: VqeResult, path: Path | str) -> Path:
    return _write_text(path, result.json(indent=2) + "\n")


def load_result(path: Path | str) -> VqeResult:
    return VqeResult.parse_file(Path(path))


def trace_header(n_parameters: int) -> list[str]:
    return [*TRACE_PREFIX, *(f"p{i}" for i in range(n_parameters))]


def write_trace_csv(trace: Sequence[TraceEntry], path: Path | str, n_parameters: int | None = None) -> Path:
    """One row per evaluation: ``nfev,energy,stddev,p0,p1,...``."""
    width = n_parameters if n_parameters is not None else (len(trace[0].parameters) if trace else 0)
    rows = (
        [str(entry.nfev), format_float(entry.energy), format_float(entry.stddev)]
        + [format_float(p) for p in entry.parameters]
        for entry in trace
    )
    return _write_rows(path, trace_header(width), rows)


def write_scan_csv(scan: ScanResult, path: Path | str) -> Path:
    rows = (
        [
            format_float(point.distance),
            format_float(point.vqe_total_energy),
            format_float(point.reference_total_energy),
            str(point.n_evaluations),
        ]
        for point in scan.points
    )
    return _write_rows(path, SCAN_HEADER, rows)


def failures_path(curve_path: Path | str) -> Path:
    curve = Path(curve_path)
    return curve.with_name(f"{curve.stem}.failures.json")


def write_scan_failures(scan: ScanResult, path: Path | str) -> Path:
    payload = [failure.dict() for failure in scan.failures]
    return _write_text(path, json.dumps(payload, indent=2) + "\n")


def write_hamiltonian_json(hamiltonian: QubitHamiltonian, path: Path | str) -> Path:
    dump = QubitHamiltonianDump(**hamiltonian.as_dict())
    return _write_text(path, dump.json(indent=2) + "\n")


def write_hamiltonian_text(hamiltonian: QubitHamiltonian, path: Path | str) -> Path:
    return _write_text(path, hamiltonian.pauli_sum.to_text())


def write_circuit_text(circuit: Circuit, path: Path | str) -> Path:
    return _write_text(path, circuit.to_text())


def best_so_far(trace: Sequence[TraceEntry]) -> list[float]:
    """Running minimum of the recorded energies, in trace order."""
    envelope: list[float] = []
    for entry in trace:
        envelope.append(entry.energy if not envelope else min(envelope[-1], entry.energy))
    return envelope


def emit_outputs(
    result: VqeResult | ScanResult,
    fmt: OutputFormat | str,
    path: Path | str,
    *,
    trace_path: Path | str | None = None,
) -> list[Path]:
    """Write a point or scan result; returns the files written.

    Points go to JSON (full result) or CSV (the trace). Scans go to JSON or
    the curve CSV, plus a failure report next to it when any point failed.
    """
    kind = OutputFormat(fmt)
    written: list[Path] = []
    if isinstance(result, ScanResult):
        if kind is OutputFormat.JSON:
            written.append(_write_text(path, result.json(indent=2) + "\n"))
        else:
            written.append(write_scan_csv(result, path))
        if result.failures:
            written.append(write_scan_failures(result, failures_path(path)))
        return written

    if kind is OutputFormat.JSON:
        written.append(write_result_json(result, path))
    else:
        written.append(write_trace_csv(result.trace, path, result.n_parameters))
    if trace_path is not None:
        written.append(write_trace_csv(result.trace, trace_path, result.n_parameters))
    return written


__all__ = [
    "OutputFormat",
    "OutputWriteError",
    "SCAN_HEADER",
    "TRACE_PREFIX",
    "best_so_far",
    "emit_outputs",
    "failures_path",
    "format_float",
    "load_result",
    "trace_header",
    "write_circuit_text",
    "write_hamiltonian_json",
    "write_hamiltonian_text",
    "write_result_json",
    "write_scan_csv",
    "write_scan_failures",
    "write_trace_csv",
]
