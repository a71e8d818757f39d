"""Command-line driver for H2 ground-state runs.

Two commands are available:

1. ``point`` runs one VQE calculation at a single inter-atomic distance and
   writes the result JSON (or the trace CSV) plus optional artifacts.
2. ``scan`` runs one point per distance on an inclusive grid and writes the
   dissociation curve as CSV.

Example usages::

    # Default run: 0.74 A, parity mapping with reduction, UCCSD, BFGS.
    python -m scripts.vqe_cli point --out result.json --trace trace.csv

    # Dissociation curve on the exact backend.
    python -m scripts.vqe_cli scan --from 0.3 --to 2.5 --step 0.1 --out curve.csv
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, NoReturn

from pydantic import ValidationError

from vqe.circuits.ansatz import InitialState, VariationalForm
from vqe.core.config import AppSettings, get_settings
from vqe.core.errors import ConfigurationError, NumericalError, VqeError
from vqe.core.logging import configure_logging
from vqe.operators.encodings import Mapping
from vqe.optimizers.base import OptimizerKind
from vqe.schemas.vqe import BackendKind, InitialPointKind, VqeConfig
from vqe.services.outputs import (
    OutputFormat,
    emit_outputs,
    write_circuit_text,
    write_hamiltonian_json,
    write_hamiltonian_text,
)
from vqe.services.scan import distance_grid, run_scan
from vqe.services.vqe_runner import execute_point

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_NUMERICAL_ERROR = 2
EXIT_PARTIAL_SCAN = 3


class _Parser(argparse.ArgumentParser):
    """Usage errors are configuration errors, not argparse's default status 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG_ERROR, f"{self.prog}: error: {message}\n")


def _values(enum: Any) -> list[str]:
    return [member.value for member in enum]


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ConfigurationError(f"expected comma-separated numbers, got {text!r}") from exc


def _add_run_arguments(parser: argparse.ArgumentParser, settings: AppSettings) -> None:
    parser.add_argument("--mapping", choices=_values(Mapping), default=Mapping.PARITY.value)
    parser.add_argument(
        "--tqr",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Two-qubit reduction (default: on for the parity mapping, off otherwise).",
    )
    parser.add_argument(
        "--initial-state",
        choices=_values(InitialState),
        default=InitialState.HARTREE_FOCK.value,
    )
    parser.add_argument("--ansatz", choices=_values(VariationalForm), default=VariationalForm.UCCSD.value)
    parser.add_argument("--depth", type=int, default=1)
    parser.add_argument(
        "--optimizer",
        choices=_values(OptimizerKind),
        default=OptimizerKind.BFGS.value,
        help=(
            "Classical optimizer. There is no COBYLA, SLSQP or L-BFGS-B: use nelder_mead in place of "
            "COBYLA and bfgs (finite-difference BFGS) in place of SLSQP or L-BFGS-B."
        ),
    )
    parser.add_argument("--backend", choices=_values(BackendKind), default=BackendKind.STATEVECTOR.value)
    parser.add_argument("--shots", type=int, default=settings.backend.shots)
    parser.add_argument("--max-iter", type=int, default=settings.max_iter)
    parser.add_argument("--seed", type=int, default=settings.seed)
    parser.add_argument(
        "--initial-point",
        default=InitialPointKind.RANDOM.value,
        help="'zeros', 'random' or an explicit comma-separated vector v1,v2,...",
    )
    parser.add_argument(
        "--random-interval",
        default=None,
        help="Interval for random starts as 'lo,hi' or 'hi' (default: 0,1).",
    )
    parser.add_argument("--fd-step", type=float, default=None, help="Finite-difference step for BFGS.")
    parser.add_argument("--spsa-a", type=float, default=None, help="SPSA gain (calibrated when omitted).")
    parser.add_argument("--spsa-c", type=float, default=None, help="SPSA perturbation size.")
    parser.add_argument("--save-steps", type=int, default=None, help="SPSA trace stride.")
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Log the integrals and qubit operators at DEBUG level.",
    )
    parser.add_argument("--log-level", default=None, help="Overrides VQE_LOG_LEVEL.")


def _build_parser(settings: AppSettings) -> argparse.ArgumentParser:
    parser = _Parser(description="Variational ground-state energy of H2.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    point_parser = subparsers.add_parser("point", help="Run VQE at one inter-atomic distance.")
    point_parser.add_argument("--dist", type=float, default=0.74, help="Distance in Angstrom.")
    _add_run_arguments(point_parser, settings)
    point_parser.add_argument("--out", type=Path, default=None, help="Result file (JSON unless --format csv).")
    point_parser.add_argument("--format", choices=_values(OutputFormat), default=OutputFormat.JSON.value)
    point_parser.add_argument("--trace", type=Path, default=None, help="Trace CSV destination.")
    point_parser.add_argument("--hamiltonian-out", type=Path, default=None, help="Qubit Hamiltonian JSON.")
    point_parser.add_argument("--hamiltonian-text", type=Path, default=None, help="Qubit Hamiltonian text.")
    point_parser.add_argument("--circuit-out", type=Path, default=None, help="Ansatz circuit dump.")

    scan_parser = subparsers.add_parser("scan", help="Run VQE over a grid of distances.")
    scan_parser.add_argument("--from", dest="start", type=float, default=0.3)
    scan_parser.add_argument("--to", dest="stop", type=float, default=2.5)
    scan_parser.add_argument("--step", type=float, default=0.1)
    _add_run_arguments(scan_parser, settings)
    scan_parser.add_argument("--warm-start", action="store_true")
    scan_parser.add_argument("--workers", type=int, default=None, help="Concurrent scan points.")
    scan_parser.add_argument("--out", type=Path, default=None, help="Curve file (CSV unless --format json).")
    scan_parser.add_argument("--format", choices=_values(OutputFormat), default=OutputFormat.CSV.value)

    return parser


def _initial_point_fields(text: str) -> dict[str, Any]:
    choice = text.strip().lower()
    if choice in (InitialPointKind.ZEROS.value, InitialPointKind.RANDOM.value):
        return {"initial_point": InitialPointKind(choice)}
    return {"initial_point": InitialPointKind.EXPLICIT, "initial_values": _float_list(text)}


def _build_config(args: argparse.Namespace, distance: float | None = None) -> VqeConfig:
    mapping = Mapping(args.mapping)
    tqr = args.tqr if args.tqr is not None else mapping is Mapping.PARITY
    fields: dict[str, Any] = {
        "mapping": mapping,
        "tqr": tqr,
        "initial_state": args.initial_state,
        "var_form": args.ansatz,
        "depth": args.depth,
        "optimizer": args.optimizer,
        "backend": args.backend,
        "shots": args.shots,
        "max_iter": args.max_iter,
        "seed": args.seed,
        "fd_step": args.fd_step,
        "spsa_a": args.spsa_a,
        "spsa_c": args.spsa_c,
        "save_steps": args.save_steps,
    }
    if distance is not None:
        fields["distance"] = distance
    if args.random_interval is not None:
        fields["random_interval"] = _float_list(args.random_interval)
    fields.update(_initial_point_fields(args.initial_point))
    return VqeConfig(**fields)


def _run_point(args: argparse.Namespace, settings: AppSettings) -> int:
    config = _build_config(args, distance=args.dist)
    run = execute_point(config, settings=settings)
    result = run.result
    if args.out is not None:
        emit_outputs(result, args.format, args.out, trace_path=args.trace)
    elif args.trace is not None:
        emit_outputs(result, OutputFormat.CSV, args.trace)
    if args.hamiltonian_out is not None:
        write_hamiltonian_json(run.problem.hamiltonian, args.hamiltonian_out)
    if args.hamiltonian_text is not None:
        write_hamiltonian_text(run.problem.hamiltonian, args.hamiltonian_text)
    if args.circuit_out is not None:
        write_circuit_text(run.problem.ansatz, args.circuit_out)

    print(
        f"distance={config.distance} total_energy={result.total_energy:.12f} "
        f"reference={result.reference_total_energy:.12f} "
        f"error={abs(result.total_energy - result.reference_total_energy):.3e} "
        f"nfev={result.n_evaluations}"
    )
    return EXIT_OK


def _run_scan(args: argparse.Namespace, settings: AppSettings) -> int:
    distances = distance_grid(args.start, args.stop, args.step)
    config = _build_config(args, distance=distances[0])
    scan = run_scan(
        config,
        distances,
        warm_start=args.warm_start,
        max_workers=args.workers,
        settings=settings,
    )
    if args.out is not None:
        emit_outputs(scan, args.format, args.out)
    for point in scan.points:
        print(
            f"{point.distance:.4f} {point.vqe_total_energy:.12f} "
            f"{point.reference_total_energy:.12f} {point.n_evaluations}"
        )
    for failure in scan.failures:
        print(f"Point {failure.distance} failed: {failure.error}", file=sys.stderr)
    return EXIT_PARTIAL_SCAN if scan.partial else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        settings = get_settings()
    except ValidationError as exc:
        print(f"Settings validation failed:\n{exc.json(indent=2)}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    parser = _build_parser(settings)
    args = parser.parse_args(argv)
    level = args.log_level or ("DEBUG" if args.verbose else settings.log_level)
    configure_logging(level)

    handlers = {"point": _run_point, "scan": _run_scan}
    try:
        return handlers[args.command](args, settings)
    except ValidationError as exc:
        print(f"Invalid run configuration:\n{exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except ConfigurationError as exc:
        print(f"Configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except NumericalError as exc:
        print(f"Numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL_ERROR
    except VqeError as exc:
        print(f"Run failed: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL_ERROR


if __name__ == "__main__":  # pragma: no cover - script entry point
    sys.exit(main())
