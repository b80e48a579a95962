import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from graphvqe import DomainError
from graphvqe.pauli import PauliSum, pauli_decompose, pauli_to_matrix
from graphvqe.simulator import (
    AnsatzConfig,
    StateVector,
    apply_ansatz,
    apply_cnot,
    apply_single_qubit,
    expectation_exact,
    expectation_sampled,
    rx,
    rz,
)

K4 = np.ones((4, 4)) - np.eye(4)
PLUS = StateVector.from_amplitudes([1, 1])
PLUS2 = StateVector.from_amplitudes([1, 1, 1, 1])


def dense_single(gate, q, n):
    """Full 2**n x 2**n operator; qubit 0 is the rightmost Kronecker factor."""
    op = np.ones((1, 1))
    for p in range(n - 1, -1, -1):
        op = np.kron(op, gate if p == q else np.eye(2))
    return op


def dense_cnot(c, t, n):
    dim = 2**n
    op = np.zeros((dim, dim))
    for i in range(dim):
        j = i ^ (1 << t) if i >> c & 1 else i
        op[j, i] = 1
    return op


def dense_ansatz(n, layers, theta, ring=False):
    theta = np.asarray(theta).reshape(layers, n, 2)
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = 1
    pairs = [(q, q + 1) for q in range(n - 1)] + ([(n - 1, 0)] if ring and n > 2 else [])
    for layer in theta:
        for q in range(n):
            psi = dense_single(rx(layer[q, 0]), q, n) @ psi
            psi = dense_single(rz(layer[q, 1]), q, n) @ psi
        for c, t in pairs:
            psi = dense_cnot(c, t, n) @ psi
    return psi


def test_gate_matrices():
    x = np.array([[0, 1], [1, 0]])
    z = np.diag([1, -1])
    for t in (0.3, 1.7, np.pi):
        # exp(-i t P / 2) = cos(t/2) I - i sin(t/2) P for involutory P
        np.testing.assert_allclose(rx(t), np.cos(t / 2) * np.eye(2) - 1j * np.sin(t / 2) * x)
        np.testing.assert_allclose(rz(t), np.cos(t / 2) * np.eye(2) - 1j * np.sin(t / 2) * z)


def test_identity_rotations():
    psi = apply_ansatz(AnsatzConfig(1, 1), [0, 0])
    np.testing.assert_allclose(psi.amplitudes, [1, 0])


def test_rx_pi_flips():
    psi = apply_ansatz(AnsatzConfig(1, 1), [np.pi, 0])
    np.testing.assert_allclose(psi.amplitudes, [0, -1j], atol=1e-15)


def test_uniform_superposition():
    psi = apply_ansatz(AnsatzConfig(2, 1), [np.pi / 2, 0, np.pi / 2, 0])
    np.testing.assert_allclose(psi.probabilities(), [0.25] * 4, atol=1e-15)


@pytest.mark.parametrize("layers", [1, 2, 5])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_zero_angles_give_ground_state(n, layers):
    psi = apply_ansatz(AnsatzConfig(n, layers), np.zeros(2 * n * layers))
    expected = np.zeros(2**n)
    expected[0] = 1
    np.testing.assert_allclose(psi.amplitudes, expected)


@given(st.integers(1, 4), st.integers(1, 3), st.booleans(), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_ansatz_matches_dense_oracle(n, layers, ring, seed):
    theta = np.random.default_rng(seed).uniform(0, 2 * np.pi, 2 * n * layers)
    cfg = AnsatzConfig(n, layers, "ring" if ring else "chain")
    psi = apply_ansatz(cfg, theta)
    np.testing.assert_allclose(psi.amplitudes, dense_ansatz(n, layers, theta, ring), atol=1e-12)
    assert abs(psi.norm - 1) <= 1e-12


def test_cnot_and_single_qubit_match_dense():
    rng = np.random.default_rng(0)
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    g = rx(0.7)
    for q in range(3):
        np.testing.assert_allclose(apply_single_qubit(amps, g, q), dense_single(g, q, 3) @ amps)
    for c, t in [(0, 1), (1, 2), (2, 0), (0, 2)]:
        np.testing.assert_allclose(apply_cnot(amps, c, t), dense_cnot(c, t, 3) @ amps)
        assert np.isclose(np.linalg.norm(apply_cnot(amps, c, t)), np.linalg.norm(amps))


def test_param_count_and_errors():
    cfg = AnsatzConfig(3, 4)
    assert cfg.n_params == 24
    with pytest.raises(DomainError):
        apply_ansatz(cfg, np.zeros(23))
    with pytest.raises(DomainError):
        AnsatzConfig(2, 1, "star")
    assert AnsatzConfig(3, 1, "ring").cnot_pairs() == [(0, 1), (1, 2), (2, 0)]
    assert AnsatzConfig(1, 1).cnot_pairs() == []


def test_state_json():
    import json

    data = json.loads(StateVector.from_amplitudes([1, 1j]).to_json())
    np.testing.assert_allclose(data, [[2**-0.5, 0], [0, 2**-0.5]])


def test_exact_expectation_examples():
    z = PauliSum(1, ((1, "Z"),))
    x = PauliSum(1, ((1, "X"),))
    assert expectation_exact(z, StateVector.zero(1)) == pytest.approx(1.0)
    assert expectation_exact(x, PLUS) == pytest.approx(1.0)
    # <++|A(K4)|++> = sum of entries / 4
    assert K4.sum() / 4 == 3.0
    assert expectation_exact(pauli_decompose(K4), PLUS2) == pytest.approx(3.0)


@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_exact_expectation_matches_dense(n, seed):
    rng = np.random.default_rng(seed)
    dim = 2**n
    m = rng.normal(size=(dim, dim))
    amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    psi = StateVector.from_amplitudes(amps)
    v = psi.amplitudes
    got = expectation_exact(pauli_decompose(m), psi)
    np.testing.assert_allclose(got, v.conj() @ m @ v, atol=1e-10)
    sym = expectation_exact(pauli_decompose(m + m.T), psi)
    assert abs(sym.imag) <= 1e-10


def test_exact_expectation_is_linear():
    rng = np.random.default_rng(3)
    a, b = rng.normal(size=(2, 4, 4))
    psi = StateVector.from_amplitudes(rng.normal(size=4) + 1j * rng.normal(size=4))
    ha, hb = pauli_decompose(a), pauli_decompose(b)
    np.testing.assert_allclose(
        expectation_exact(ha + hb, psi), expectation_exact(ha, psi) + expectation_exact(hb, psi)
    )


def test_qubit_mismatch():
    with pytest.raises(DomainError):
        expectation_exact(PauliSum(2, ((1, "ZZ"),)), StateVector.zero(1))
    with pytest.raises(DomainError):
        expectation_sampled(PauliSum(2, ((1, "ZZ"),)), StateVector.zero(1), 10, 0)


def test_sampled_deterministic_cases():
    z = PauliSum(1, ((1, "Z"),))
    for shots in (1, 17, 1000):
        assert expectation_sampled(z, StateVector.zero(1), shots, 5) == 1.0
    # |++> is an eigenstate of IX, XI and XX
    assert expectation_sampled(pauli_decompose(K4), PLUS2, 10_000, 1) == 3.0
    assert expectation_sampled(PauliSum.identity(2, 2.5), PLUS2, 3, 0) == 2.5


def test_sampled_y_basis():
    # (|0> + i|1>)/sqrt2 is the +1 eigenstate of Y
    y = PauliSum(1, ((1, "Y"),))
    psi = StateVector.from_amplitudes([1, 1j])
    assert expectation_sampled(y, psi, 500, 0) == 1.0
    assert expectation_sampled(y, StateVector.from_amplitudes([1, -1j]), 500, 0) == -1.0


def test_sampled_binomial_spread():
    z = PauliSum(1, ((1, "Z"),))
    est = expectation_sampled(z, PLUS, 10_000, 0)
    assert abs(est) <= 0.05


def test_sampled_rejects_non_hermitian():
    s = pauli_decompose([[0, 1], [0, 0]])
    with pytest.raises(DomainError, match="expectation_exact"):
        expectation_sampled(s, PLUS, 10, 0)
    with pytest.raises(DomainError):
        expectation_sampled(PauliSum(1, ((1, "Z"),)), PLUS, 0, 0)


def test_sampled_converges_on_random_two_qubit_sums():
    rng = np.random.default_rng(11)
    shots = 2000
    for _ in range(3):
        m = rng.normal(size=(4, 4))
        h = pauli_decompose(m + m.T)
        psi = StateVector.from_amplitudes(rng.normal(size=4) + 1j * rng.normal(size=4))
        exact = expectation_exact(h, psi).real
        ests = [expectation_sampled(h, psi, shots, s) for s in range(100)]
        assert abs(np.mean(ests) - exact) <= 5 / np.sqrt(shots)


def test_sampled_reproducible():
    h = pauli_decompose(np.array([[1.0, 2, 0, 1], [2, 0, 1, 0], [0, 1, -1, 3], [1, 0, 3, 2]]))
    psi = apply_ansatz(AnsatzConfig(2, 2), np.linspace(0, 3, 8))
    assert expectation_sampled(h, psi, 300, 9) == expectation_sampled(h, psi, 300, 9)
