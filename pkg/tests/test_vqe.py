import numpy as np
import pytest

from graphvqe import DomainError
from graphvqe.graph import Graph, adjacency_matrix, laplacian_matrix
from graphvqe.oracle import classical_eig_symmetric
from graphvqe.pauli import PauliSum, pauli_decompose
from graphvqe.simulator import StateVector
from graphvqe.vqe import VqeConfig, deflate, full_spectrum, vqe_max, vqe_min

K4 = np.ones((4, 4)) - np.eye(4)
K2 = Graph.from_edges(2, [(0, 1)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
EXACT = VqeConfig(layers=3, restarts=3, tolerance=1e-6)


def test_single_z():
    res = vqe_min(PauliSum(1, ((1, "Z"),)), VqeConfig(layers=1, seed=2))
    assert res.eigenvalue == pytest.approx(-1.0, abs=1e-4)


def test_p2_adjacency_min():
    h = pauli_decompose(adjacency_matrix(K2))
    assert h.as_dict() == {"X": 1.0}
    assert vqe_min(h, VqeConfig(layers=1)).eigenvalue == pytest.approx(-1.0, abs=1e-4)


def test_k4_min_and_max():
    h = pauli_decompose(K4)
    assert vqe_min(h, EXACT).eigenvalue == pytest.approx(-1.0, abs=1e-2)
    assert vqe_max(h, EXACT).eigenvalue == pytest.approx(3.0, abs=1e-2)


def test_laplacian_maxima():
    assert vqe_max(pauli_decompose(laplacian_matrix(K2)), EXACT).eigenvalue == pytest.approx(2.0, abs=1e-2)
    # C4 is bipartite and 2-regular, so its largest Laplacian eigenvalue is 2d = 4
    assert classical_eig_symmetric(laplacian_matrix(C4))[0] == pytest.approx(4.0)
    assert vqe_max(pauli_decompose(laplacian_matrix(C4)), EXACT).eigenvalue == pytest.approx(4.0, abs=1e-1)


def test_result_fields_and_json():
    h = pauli_decompose(K4)
    res = vqe_min(h, VqeConfig(layers=2, restarts=2, seed=4), n_active=4)
    assert res.theta_opt.shape == (8,)
    assert np.all((res.theta_opt >= 0) & (res.theta_opt < 2 * np.pi))
    assert res.evaluations == len(res.history)
    assert res.iterations > 0 and res.wall_time > 0
    assert res.padded_weight == 0.0
    assert abs(res.state.norm - 1) < 1e-12
    # eigenvalue is the objective at the reported optimum
    from graphvqe.simulator import apply_ansatz, AnsatzConfig, expectation_exact

    again = expectation_exact(h, apply_ansatz(AnsatzConfig(2, 2), res.theta_opt)).real
    assert again == pytest.approx(res.eigenvalue, abs=1e-9)
    data = res.to_json()
    assert set(data) == {"eigenvalue", "theta", "iterations", "evaluations", "wall_time_ms", "restarts_used", "padded_weight"}
    assert data["restarts_used"] == 2


def test_variational_bound_every_evaluation():
    rng = np.random.default_rng(0)
    m = rng.normal(size=(8, 8))
    m = m + m.T
    lam_min = classical_eig_symmetric(m)[-1]
    res = vqe_min(pauli_decompose(m), VqeConfig(layers=2, seed=1))
    assert res.history.min() >= lam_min - 1e-9


def test_max_is_negated_min():
    h = pauli_decompose(laplacian_matrix(C4))
    cfg = VqeConfig(layers=2, seed=9)
    a = vqe_max(h, cfg)
    b = vqe_min(-h, cfg)
    assert a.eigenvalue == -b.eigenvalue
    np.testing.assert_array_equal(a.theta_opt, b.theta_opt)


def test_determinism():
    h = pauli_decompose(K4)
    cfg = VqeConfig(layers=2, restarts=2, seed=13)
    a, b = vqe_min(h, cfg), vqe_min(h, cfg)
    assert a.eigenvalue == b.eigenvalue
    np.testing.assert_array_equal(a.theta_opt, b.theta_opt)
    assert a.evaluations == b.evaluations


def test_sampled_mode():
    h = pauli_decompose(K4)
    cfg = VqeConfig(layers=2, shots=2000, seed=3, max_iterations=300)
    res = vqe_min(h, cfg)
    # shot noise of a 3-term sum at 2000 shots is well under 0.2
    assert res.eigenvalue == pytest.approx(-1.0, abs=0.3)
    assert vqe_min(h, cfg).eigenvalue == res.eigenvalue


def test_sampled_rejects_non_hermitian():
    with pytest.raises(DomainError):
        vqe_min(pauli_decompose([[0, 1], [0, 0]]), VqeConfig(shots=10))


def test_directed_uses_symmetric_part():
    m = np.array([[0, 2.0], [0, 0]])
    res = vqe_max(pauli_decompose(m), VqeConfig(layers=2, restarts=2))
    assert res.eigenvalue == pytest.approx(1.0, abs=1e-4)


def test_padded_weight_reported():
    # 3-vertex empty graph padded to 4: objective is flat, weight lands anywhere
    h = PauliSum(2, ((1.0, "ZZ"),))
    res = vqe_min(h, VqeConfig(layers=1, seed=0), n_active=3)
    assert res.padded_weight == pytest.approx(res.state.probabilities()[3])


def test_config_validation():
    with pytest.raises(DomainError):
        VqeConfig(layers=0)
    with pytest.raises(DomainError):
        VqeConfig(restarts=0)
    with pytest.raises(DomainError):
        VqeConfig(tolerance=0)
    assert VqeConfig().tol == 1e-6
    assert VqeConfig(shots=100).tol == 1e-3
    assert VqeConfig().max_iter(12) == 2400


def test_deflate_examples():
    np.testing.assert_allclose(deflate(np.diag([3.0, 1.0]), 3.0, [1, 0]), np.diag([0, 1]))
    np.testing.assert_allclose(deflate(np.eye(2), 1.0, [1.0, 0.0]), np.diag([0, 1]))
    out = deflate(K4, 3.0, np.ones(4) / 2)
    np.testing.assert_allclose(classical_eig_symmetric(out), [0, -1, -1, -1], atol=1e-12)


def test_deflate_accepts_state_and_complex_phase():
    v = StateVector.from_amplitudes(np.exp(0.7j) * np.ones(4))
    out = deflate(K4, 3.0, v)
    np.testing.assert_allclose(out, out.conj().T, atol=1e-14)
    np.testing.assert_allclose(np.linalg.eigvalsh(out), [-1, -1, -1, 0], atol=1e-12)


def test_deflation_replaces_eigenvalue_with_zero():
    rng = np.random.default_rng(2)
    for _ in range(10):
        m = rng.normal(size=(8, 8))
        m = m + m.T
        w, v = classical_eig_symmetric(m, return_vectors=True)
        out = deflate(m, w[0], 3.0 * v[:, 0])
        expected = np.sort(np.r_[0.0, w[1:]])[::-1]
        np.testing.assert_allclose(classical_eig_symmetric(out), expected, atol=1e-8)


def test_deflate_errors():
    with pytest.raises(DomainError):
        deflate([[0, 1], [0, 0]], 1.0, [1, 0])
    with pytest.raises(DomainError):
        deflate(np.eye(2), 1.0, [0, 0])


def test_full_spectrum_k2_laplacian():
    res = full_spectrum(laplacian_matrix(K2), 2, EXACT)
    np.testing.assert_allclose(res.eigenvalues, [2, 0], atol=1e-2)


def test_full_spectrum_k4():
    res = full_spectrum(K4, 4, EXACT)
    np.testing.assert_allclose(res.eigenvalues, [3, -1, -1, -1], atol=1e-2)
    assert res.found[0] == pytest.approx(3, abs=1e-2)
    assert len(res.runs) == 4


def test_full_spectrum_diagonal():
    res = full_spectrum(np.diag([5.0, 2.0, 1.0, 0.0]), 4, EXACT)
    np.testing.assert_allclose(res.eigenvalues, [5, 2, 1, 0], atol=1e-2)
    assert res.runs[-1] is None


def test_full_spectrum_top_k():
    res = full_spectrum(np.diag([5.0, 2.0, -1.0, 0.0]), 2, EXACT)
    np.testing.assert_allclose(res.eigenvalues, [5, 2], atol=1e-2)
    assert len(res.eigenvalues) == 2


def test_full_spectrum_rejects():
    with pytest.raises(DomainError):
        full_spectrum([[0, 1], [0, 0]])
    with pytest.raises(DomainError):
        full_spectrum(np.eye(2), 3)
