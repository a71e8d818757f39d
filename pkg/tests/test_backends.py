try:
    from . import _bootstrap  # noqa: F401
except Exception:  # pragma: no cover - fallback for direct execution
    import _bootstrap  # type: ignore # noqa: F401

import numpy as np
import pytest

from vqe.circuits import Circuit, Gate, GateKind, InitialState, VariationalForm, build_ansatz
from vqe.clients import (
    SamplerClient,
    StatevectorClient,
    expectation_exact,
    expectation_sampled,
    sample_counts,
    simulate,
)
from vqe.circuits.circuit import BindingError
from vqe.core.errors import ConfigurationError
from vqe.operators import HamiltonianValidationError, Mapping, PauliSum
from vqe.schemas.vqe import VqeConfig
from vqe.services import prepare_problem, run_point


@pytest.fixture
def reduced_h2(h2_hamiltonians):
    return h2_hamiltonians[(Mapping.PARITY, True)]


@pytest.fixture(scope="module")
def optimal_uccsd():
    """Reduced H2 problem and its converged UCCSD parameters at equilibrium."""
    config = VqeConfig()
    return prepare_problem(config), run_point(config).optimal_parameters


@pytest.fixture
def reduced_uccsd() -> Circuit:
    return build_ansatz(
        VariationalForm.UCCSD,
        InitialState.HARTREE_FOCK,
        n_spin_orbitals=4,
        n_particles=2,
        mapping=Mapping.PARITY,
        reduced=True,
    )


def test_bell_state_amplitudes() -> None:
    circuit = Circuit(2, (Gate(GateKind.H, (0,)), Gate(GateKind.CX, (0, 1))))
    amplitudes = simulate(circuit).amplitudes
    np.testing.assert_allclose(amplitudes, [2**-0.5, 0, 0, 2**-0.5], atol=1e-15)


def test_qubit_zero_is_least_significant() -> None:
    amplitudes = simulate(Circuit(3, (Gate(GateKind.X, (0,)),))).amplitudes
    assert abs(amplitudes[1]) == pytest.approx(1.0)


def test_exact_expectation_matches_dense_matrix(reduced_h2, reduced_uccsd) -> None:
    params = [0.2, -0.4, 0.15]
    state = simulate(reduced_uccsd, params)
    matrix = reduced_h2.pauli_sum.to_matrix()
    dense = np.vdot(state.amplitudes, matrix @ state.amplitudes).real
    assert expectation_exact(state, reduced_h2.pauli_sum).value == pytest.approx(dense, abs=1e-12)


def test_statevector_client_checks_parameter_count(reduced_h2, reduced_uccsd) -> None:
    client = StatevectorClient(reduced_h2.pauli_sum)
    with pytest.raises(BindingError):
        client.estimate(reduced_uccsd, [0.1])
    estimate = client.estimate(reduced_uccsd, [0.0, 0.0, 0.0])
    assert estimate.stddev == 0.0
    assert estimate.shots_used == 0


def test_sample_counts_bitstrings_put_last_qubit_left() -> None:
    counts = sample_counts(simulate(Circuit(2, (Gate(GateKind.X, (0,)),))), shots=100, seed=1)
    assert counts == {"01": 100}


def test_sample_counts_totals_and_determinism() -> None:
    state = simulate(Circuit(2, (Gate(GateKind.H, (0,)), Gate(GateKind.H, (1,)))))
    counts = sample_counts(state, shots=4000, seed=7)
    assert sum(counts.values()) == 4000
    assert set(counts) == {"00", "01", "10", "11"}
    assert counts == sample_counts(state, shots=4000, seed=7)


def test_sampled_estimate_within_statistical_error(reduced_h2, reduced_uccsd) -> None:
    params = [0.1, 0.1, -0.3]
    exact = expectation_exact(simulate(reduced_uccsd, params), reduced_h2.pauli_sum).value
    estimate = expectation_sampled(reduced_uccsd, params, reduced_h2.pauli_sum, shots=8192, seed=3)
    assert estimate.stddev > 0.0
    assert abs(estimate.value - exact) < 5.0 * estimate.stddev
    # Four non-identity terms measured with fresh shots each.
    assert estimate.shots_used == 4 * 8192


@pytest.mark.slow
def test_optimal_point_estimates_stay_within_five_stddev(optimal_uccsd) -> None:
    problem, params = optimal_uccsd
    pauli_sum = problem.hamiltonian.pauli_sum
    exact = expectation_exact(simulate(problem.ansatz, params), pauli_sum).value
    inside = 0
    for trial in range(100):
        estimate = expectation_sampled(problem.ansatz, params, pauli_sum, shots=8192, seed=trial)
        inside += abs(estimate.value - exact) < 5.0 * estimate.stddev
    assert inside >= 95


def test_stddev_quarters_when_shots_grow_sixteenfold(optimal_uccsd) -> None:
    problem, params = optimal_uccsd
    pauli_sum = problem.hamiltonian.pauli_sum
    small = expectation_sampled(problem.ansatz, params, pauli_sum, shots=1024, seed=1)
    large = expectation_sampled(problem.ansatz, params, pauli_sum, shots=16384, seed=1)
    assert 2.8 <= small.stddev / large.stddev <= 5.7


def test_eigenstate_has_zero_variance() -> None:
    hamiltonian = PauliSum.from_labels([(0.5, "II"), (-0.25, "ZI"), (0.125, "ZZ")])
    estimate = expectation_sampled(Circuit(2), [], hamiltonian, shots=10, seed=0)
    assert estimate.value == pytest.approx(0.5 - 0.25 + 0.125)
    assert estimate.stddev == 0.0


@pytest.mark.parametrize(
    "gates,label",
    [
        ((Gate(GateKind.H, (0,)),), "X"),
        ((Gate(GateKind.H, (0,)), Gate(GateKind.S, (0,))), "Y"),
    ],
)
def test_rotated_basis_eigenstates_have_zero_variance(gates, label: str) -> None:
    hamiltonian = PauliSum.from_labels([(0.75, label)])
    estimate = expectation_sampled(Circuit(1, gates), [], hamiltonian, shots=500, seed=4)
    assert estimate.value == pytest.approx(0.75)
    assert estimate.stddev == 0.0


def test_hadamard_outcomes_follow_binomial_bound() -> None:
    shots = 10**6
    counts = sample_counts(simulate(Circuit(1, (Gate(GateKind.H, (0,)),))), shots=shots, seed=8)
    sigma = (0.25 * shots) ** 0.5
    assert set(counts) == {"0", "1"}
    for outcome in ("0", "1"):
        assert abs(counts[outcome] - 0.5 * shots) < 5.0 * sigma


def test_sampled_estimation_validates_inputs(reduced_h2, reduced_uccsd) -> None:
    with pytest.raises(ConfigurationError):
        expectation_sampled(reduced_uccsd, [0.0] * 3, reduced_h2.pauli_sum, shots=0)
    with pytest.raises(HamiltonianValidationError):
        expectation_sampled(Circuit(1), [], PauliSum.from_labels([(1j, "X")]), shots=10)
    with pytest.raises(ConfigurationError):
        expectation_sampled(Circuit(3), [], reduced_h2.pauli_sum, shots=10)


def test_sampler_client_derives_a_stream_per_call(reduced_h2, reduced_uccsd) -> None:
    params = [0.2, 0.1, -0.1]
    first = SamplerClient(reduced_h2.pauli_sum, shots=512, seed=99)
    second = SamplerClient(reduced_h2.pauli_sum, shots=512, seed=99)
    a1, a2 = first.estimate(reduced_uccsd, params), first.estimate(reduced_uccsd, params)
    b1, b2 = second.estimate(reduced_uccsd, params), second.estimate(reduced_uccsd, params)
    assert (a1, a2) == (b1, b2)
    assert a1.value != a2.value


def test_sampler_client_shot_override(reduced_h2, reduced_uccsd) -> None:
    client = SamplerClient(reduced_h2.pauli_sum, shots=100, seed=5)
    assert client.estimate(reduced_uccsd, [0.0] * 3, shots=1000).shots_used == 4 * 1000
