"""Pipeline services: single points, scans, exact references and output writers."""

from .exact_reference import RESIDUAL_TOLERANCE, SpectrumResult, fci_oracle, lowest_eigenvalue
from .outputs import (
    OutputFormat,
    OutputWriteError,
    best_so_far,
    emit_outputs,
    load_result,
    write_circuit_text,
    write_hamiltonian_json,
    write_hamiltonian_text,
    write_result_json,
    write_scan_csv,
    write_scan_failures,
    write_trace_csv,
)
from .scan import check_distances, distance_grid, point_config, run_scan, run_scan_async
from .vqe_runner import PointProblem, PointRun, execute_point, pipeline_stage, prepare_problem, run_point

__all__ = [
    "OutputFormat",
    "OutputWriteError",
    "PointProblem",
    "PointRun",
    "RESIDUAL_TOLERANCE",
    "SpectrumResult",
    "best_so_far",
    "check_distances",
    "distance_grid",
    "emit_outputs",
    "execute_point",
    "fci_oracle",
    "load_result",
    "lowest_eigenvalue",
    "pipeline_stage",
    "point_config",
    "prepare_problem",
    "run_point",
    "run_scan",
    "run_scan_async",
    "write_circuit_text",
    "write_hamiltonian_json",
    "write_hamiltonian_text",
    "write_result_json",
    "write_scan_csv",
    "write_scan_failures",
    "write_trace_csv",
]
