"""Variational eigensolver loop, eigenvalue deflation and full spectra."""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

import numpy as np

from .exceptions import DomainError
from .optimize import nelder_mead
from .pauli import PauliSum, pauli_decompose, simplify
from .simulator import (
    AnsatzConfig,
    StateVector,
    apply_ansatz,
    compile_pauli_sum,
    expectation_sampled,
)

__all__ = [
    "VqeConfig",
    "VqeResult",
    "SpectrumResult",
    "vqe_min",
    "vqe_max",
    "deflate",
    "full_spectrum",
]


@dataclass(frozen=True)
class VqeConfig:
    """Solver settings.

    ``shots=0`` evaluates expectations exactly.  ``tolerance`` defaults to
    1e-6 in exact mode and 1e-3 in sampled mode; ``max_iterations`` defaults
    to 200 per ansatz parameter.
    """

    layers: int = 3
    shots: int = 0
    max_iterations: int | None = None
    tolerance: float | None = None
    restarts: int = 1
    seed: int = 0
    entangler: str = "chain"
    step: float = 0.25

    def __post_init__(self):
        if self.layers < 1:
            raise DomainError("layers must be positive")
        if self.shots < 0:
            raise DomainError("shots must be non-negative")
        if self.restarts < 1:
            raise DomainError("restarts must be at least 1")
        if self.tolerance is not None and self.tolerance <= 0:
            raise DomainError("tolerance must be positive")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise DomainError("max_iterations must be positive")

    @property
    def tol(self) -> float:
        if self.tolerance is not None:
            return self.tolerance
        return 1e-3 if self.shots else 1e-6

    def max_iter(self, n_params: int) -> int:
        return self.max_iterations or 200 * n_params


@dataclass
class VqeResult:
    eigenvalue: float
    theta_opt: np.ndarray
    state: StateVector
    iterations: int
    evaluations: int
    wall_time: float
    restarts_used: int = 1
    padded_weight: float = 0.0
    history: np.ndarray = field(default_factory=lambda: np.zeros(0), repr=False)

    def to_json(self) -> dict:
        return {
            "eigenvalue": self.eigenvalue,
            "theta": self.theta_opt.tolist(),
            "iterations": self.iterations,
            "evaluations": self.evaluations,
            "wall_time_ms": 1e3 * self.wall_time,
            "restarts_used": self.restarts_used,
            "padded_weight": self.padded_weight,
        }


@dataclass
class SpectrumResult:
    """Eigenvalues sorted descending plus the per-step solver runs.

    ``found`` lists the eigenvalues in discovery order; ``runs`` holds the
    solver result for each of them (``None`` for zeros inferred at the end).
    """

    eigenvalues: list
    found: list
    runs: list

    def to_json(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "found": list(self.found),
            "runs": [r.to_json() if r is not None else None for r in self.runs],
        }


def _check_pauli_sum(h: PauliSum, cfg: VqeConfig) -> PauliSum:
    h = simplify(h)
    if cfg.shots and not h.is_hermitian():
        raise DomainError("sampled mode needs a Hermitian sum; use shots=0 or pass h.hermitian_part()")
    return h


def vqe_min(h: PauliSum, cfg: VqeConfig = VqeConfig(), n_active: int | None = None) -> VqeResult:
    """Minimise ``Re <psi(theta)|h|psi(theta)>`` over the layered ansatz.

    Each restart draws its start point uniformly from ``[0, 2pi)`` with a
    generator seeded by ``(cfg.seed, restart)``; the best restart wins.
    ``n_active`` is the number of unpadded basis states, used to report how
    much weight the final state puts on padding.
    """
    h = _check_pauli_sum(h, cfg)
    ansatz = AnsatzConfig(h.n_qubits, cfg.layers, cfg.entangler)
    compiled = compile_pauli_sum(h)
    n_params = ansatz.n_params
    history = []

    best = None
    iterations = evaluations = 0
    start = time.perf_counter()
    for r in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, r])
        x0 = rng.uniform(0.0, 2 * np.pi, n_params)
        if cfg.shots:
            shot_seq = np.random.SeedSequence([cfg.seed, r, 1])

            def objective(theta):
                psi = apply_ansatz(ansatz, theta)
                seed = shot_seq.spawn(1)[0]
                v = expectation_sampled(h, psi, cfg.shots, seed)
                history.append(v)
                return v
        else:

            def objective(theta):
                v = compiled.expectation(apply_ansatz(ansatz, theta).amplitudes).real
                history.append(v)
                return v

        res = nelder_mead(objective, x0, tol=cfg.tol, max_iter=cfg.max_iter(n_params), step=cfg.step)
        iterations += res.iterations
        evaluations += res.evaluations
        if best is None or res.fun < best.fun:
            best = res
    wall = time.perf_counter() - start

    state = apply_ansatz(ansatz, best.x)
    padded = 0.0
    if n_active is not None:
        padded = float(np.sum(state.probabilities()[n_active:]))
    return VqeResult(
        eigenvalue=best.fun,
        theta_opt=np.mod(best.x, 2 * np.pi),
        state=state,
        iterations=iterations,
        evaluations=evaluations,
        wall_time=wall,
        restarts_used=cfg.restarts,
        padded_weight=padded,
        history=np.asarray(history),
    )


def vqe_max(h: PauliSum, cfg: VqeConfig = VqeConfig(), n_active: int | None = None) -> VqeResult:
    """Largest eigenvalue, as ``-vqe_min(-h)``."""
    res = vqe_min(-h, cfg, n_active)
    res.eigenvalue = -res.eigenvalue
    res.history = -res.history
    return res


def _require_hermitian(m: np.ndarray, what: str):
    if np.max(np.abs(m - m.conj().T), initial=0.0) > 1e-12:
        raise DomainError(f"{what} is defined only for symmetric matrices")


def deflate(m, lam: float, v) -> np.ndarray:
    """``m - lam * v v^dagger / |v|^2``, zeroing the eigenvalue along ``v``."""
    m = np.asarray(m)
    _require_hermitian(m, "deflation")
    if isinstance(v, StateVector):
        v = v.amplitudes
    v = np.asarray(v)
    nrm2 = float(np.vdot(v, v).real)
    if nrm2 <= 0:
        raise DomainError("deflation vector must be non-zero")
    out = m - lam * np.outer(v, v.conj()) / nrm2
    if np.isrealobj(m) and np.isrealobj(v):
        return out.real
    return out


def full_spectrum(m, k: int | None = None, cfg: VqeConfig = VqeConfig(), zero_tol: float = 1e-2) -> SpectrumResult:
    """Top ``k`` eigenvalues of a symmetric matrix by repeated deflation.

    Deflation sends each found eigenvalue to 0, so once the largest
    remaining value is within ``zero_tol`` of 0 the positive part of the
    spectrum is exhausted.  The search then switches to minimisation to
    collect the negative eigenvalues the same way, and whatever is left
    over is zero.  Each step re-compiles the deflated matrix and runs with
    seed ``cfg.seed + step``.
    """
    m = np.asarray(m)
    _require_hermitian(m, "full_spectrum")
    dim = m.shape[0]
    k = dim if k is None else k
    if not 1 <= k <= dim:
        raise DomainError(f"k must lie in [1, {dim}], got {k}")

    found, runs = [], []
    current = m
    step = 0
    for solve, sign in ((vqe_max, 1), (vqe_min, -1)):
        while len(found) < dim:
            if sign < 0 and len(found) >= k and all(f > 0 for f in found[:k]):
                break
            res = solve(pauli_decompose(current), replace(cfg, seed=cfg.seed + step))
            step += 1
            if sign * res.eigenvalue <= zero_tol:
                break
            found.append(res.eigenvalue)
            runs.append(res)
            current = deflate(current, res.eigenvalue, res.state)

    n_zero = dim - len(found)
    order = sorted(range(len(found)), key=lambda i: -found[i])
    values = [found[i] for i in order]
    # zeros slot in between the positive and negative eigenvalues
    n_pos = sum(v > 0 for v in values)
    eigenvalues = values[:n_pos] + [0.0] * n_zero + values[n_pos:]
    all_runs = [runs[i] for i in order]
    all_runs = all_runs[:n_pos] + [None] * n_zero + all_runs[n_pos:]
    return SpectrumResult(eigenvalues[:k], found, all_runs[:k])
