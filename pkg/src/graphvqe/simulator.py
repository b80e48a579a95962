"""Statevector simulation of the layered RX/RZ + CNOT ansatz.

Conventions:

* ``RX(t) = exp(-i t X / 2)``, ``RZ(t) = exp(-i t Z / 2)``;
* qubit 0 is the least significant bit of the amplitude index;
* ``CNOT(c, t)`` flips qubit ``t`` when qubit ``c`` is set, and the chain
  uses ``c = q``, ``t = q + 1`` for ``q = 0 .. n-2``;
* parameters are laid out as ``theta.reshape(layers, n_qubits, 2)`` with the
  RX angle first and the RZ angle second.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import DomainError
from .pauli import PauliSum, simplify

__all__ = [
    "StateVector",
    "AnsatzConfig",
    "rx",
    "rz",
    "apply_single_qubit",
    "apply_cnot",
    "apply_ansatz",
    "CompiledPauliSum",
    "compile_pauli_sum",
    "expectation_exact",
    "expectation_sampled",
]


@dataclass(frozen=True)
class StateVector:
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        dim = amps.shape[0]
        if amps.ndim != 1 or dim < 2 or dim & (dim - 1):
            raise DomainError(f"amplitude vector must have power-of-two length >= 2, got {amps.shape}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def zero(cls, n_qubits: int) -> "StateVector":
        amps = np.zeros(2**n_qubits, dtype=complex)
        amps[0] = 1.0
        return cls(amps)

    @classmethod
    def from_amplitudes(cls, amps) -> "StateVector":
        amps = np.asarray(amps, dtype=complex)
        return cls(amps / np.linalg.norm(amps))

    @property
    def n_qubits(self) -> int:
        return self.amplitudes.shape[0].bit_length() - 1

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def to_json(self) -> str:
        return json.dumps([[a.real, a.imag] for a in self.amplitudes.tolist()])


@dataclass(frozen=True)
class AnsatzConfig:
    n_qubits: int
    layers: int = 3
    entangler: str = "chain"

    def __post_init__(self):
        if self.n_qubits < 1 or self.layers < 1:
            raise DomainError("n_qubits and layers must be positive")
        if self.entangler not in ("chain", "ring"):
            raise DomainError(f"entangler must be 'chain' or 'ring', got {self.entangler!r}")

    @property
    def n_params(self) -> int:
        return 2 * self.n_qubits * self.layers

    def cnot_pairs(self) -> list[tuple[int, int]]:
        pairs = [(q, q + 1) for q in range(self.n_qubits - 1)]
        if self.entangler == "ring" and self.n_qubits > 2:
            pairs.append((self.n_qubits - 1, 0))
        return pairs


def rx(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


def rz(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]])


def apply_single_qubit(amps: np.ndarray, gate: np.ndarray, qubit: int) -> np.ndarray:
    """Apply a 2x2 ``gate`` to ``qubit`` of a flat amplitude vector."""
    view = amps.reshape(-1, 2, 2**qubit)
    return np.einsum("ab,ibj->iaj", gate, view).reshape(-1)


def apply_cnot(amps: np.ndarray, control: int, target: int) -> np.ndarray:
    return amps[_cnot_perm(amps.shape[0], control, target)]


@lru_cache(maxsize=None)
def _cnot_perm(dim: int, control: int, target: int) -> np.ndarray:
    idx = np.arange(dim)
    return np.where(idx >> control & 1, idx ^ (1 << target), idx)


@lru_cache(maxsize=None)
def _entangler_perm(cfg: AnsatzConfig) -> np.ndarray:
    # new[i] = old[perm[i]]; composing the chain gate by gate
    dim = 2**cfg.n_qubits
    perm = np.arange(dim)
    for c, t in cfg.cnot_pairs():
        perm = perm[_cnot_perm(dim, c, t)]
    return perm


def apply_ansatz(config: AnsatzConfig, theta) -> StateVector:
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (config.n_params,):
        raise DomainError(f"expected {config.n_params} angles, got shape {theta.shape}")
    n = config.n_qubits
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = 1.0
    perm = _entangler_perm(config)
    for layer in theta.reshape(config.layers, n, 2):
        for q, (a, b) in enumerate(layer):
            amps = apply_single_qubit(amps, rz(b) @ rx(a), q)
        if n > 1:
            amps = amps[perm]
    return StateVector(amps)


# -- expectation values -------------------------------------------------------


class CompiledPauliSum:
    """Index and phase tables for applying every word of a sum to a state.

    A word acts as ``P|i> = i**nY * (-1)**popcount(i & z) |i ^ x>`` where
    ``x`` marks its X/Y positions and ``z`` its Z/Y positions.  Row ``t`` of
    ``flip`` and ``weight`` holds that action for term ``t``, so one term
    costs O(2**n) and the whole sum O(terms * 2**n).
    """

    def __init__(self, h: PauliSum):
        h = simplify(h)
        self.h = h
        self.n_qubits = n = h.n_qubits
        dim = 2**n
        idx = np.arange(dim)
        xs, zs, ph = [], [], []
        for c, w in h.terms:
            x = z = 0
            ny = 0
            for p, ch in enumerate(w):
                bit = 1 << (n - 1 - p)
                if ch in "XY":
                    x |= bit
                if ch in "ZY":
                    z |= bit
                ny += ch == "Y"
            xs.append(x)
            zs.append(z)
            ph.append(c * 1j**ny)
        self.xmask = np.array(xs, dtype=np.int64)
        self.zmask = np.array(zs, dtype=np.int64)
        self.coeffs = h.coefficients
        self.flip = idx[None, :] ^ self.xmask[:, None]
        parity = np.zeros((len(xs), dim), dtype=np.int64)
        masked = idx[None, :] & self.zmask[:, None]
        for b in range(n):
            parity ^= (masked >> b) & 1
        self.weight = np.asarray(ph, dtype=complex)[:, None] * (1 - 2 * parity)

    def expectation(self, amps: np.ndarray) -> complex:
        if not len(self.coeffs):
            return 0j
        return complex(np.sum(amps[self.flip].conj() * self.weight * amps[None, :]))


_compile_cache: dict = {}


def compile_pauli_sum(h: PauliSum) -> CompiledPauliSum:
    key = (h.n_qubits, h.terms)
    got = _compile_cache.get(key)
    if got is None:
        if len(_compile_cache) > 64:
            _compile_cache.clear()
        got = _compile_cache[key] = CompiledPauliSum(h)
    return got


def _check_match(h: PauliSum, psi: StateVector):
    if h.n_qubits != psi.n_qubits:
        raise DomainError(f"Hamiltonian acts on {h.n_qubits} qubits, state has {psi.n_qubits}")


def expectation_exact(h: PauliSum, psi: StateVector) -> complex:
    """``<psi|h|psi> / <psi|psi>``."""
    _check_match(h, psi)
    amps = psi.amplitudes
    return compile_pauli_sum(h).expectation(amps) / np.vdot(amps, amps).real


_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_SDG = np.diag([1, -1j])


def expectation_sampled(h: PauliSum, psi: StateVector, shots: int, seed=None) -> float:
    """Shot-based estimate of ``<psi|h|psi>`` for a Hermitian ``h``.

    Each term is measured separately: the state is rotated into the term's
    eigenbasis (H for X, S-dagger then H for Y), ``shots`` bitstrings are
    drawn and the +-1 parity over the term's support is averaged.
    """
    _check_match(h, psi)
    if shots < 1:
        raise DomainError(f"shots must be positive, got {shots}")
    if not h.is_hermitian():
        raise DomainError(
            "sampled expectation needs real coefficients; use expectation_exact "
            "or pass h.hermitian_part()"
        )
    rng = np.random.default_rng(seed)
    n = psi.n_qubits
    base = psi.amplitudes / psi.norm
    idx = np.arange(2**n)
    total = 0.0
    for c, w in simplify(h).terms:
        support = 0
        amps = base
        for p, ch in enumerate(w):
            q = n - 1 - p
            if ch == "I":
                continue
            support |= 1 << q
            if ch == "X":
                amps = apply_single_qubit(amps, _H, q)
            elif ch == "Y":
                amps = apply_single_qubit(amps, _H @ _SDG, q)
        if not support:
            total += c.real
            continue
        probs = np.abs(amps) ** 2
        counts = rng.multinomial(shots, probs / probs.sum())
        parity = np.array([bin(i & support).count("1") & 1 for i in idx])
        total += c.real * float(np.dot(counts, 1 - 2 * parity)) / shots
    return total
