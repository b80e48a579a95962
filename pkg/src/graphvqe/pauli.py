"""Pauli-operator sums and the recursive matrix-to-Pauli compiler.

A Pauli word is a string over ``IXYZ``.  The leftmost letter is the leftmost
Kronecker factor, i.e. it acts on the most significant qubit: for
``n`` qubits, ``word[p]`` acts on qubit ``n - 1 - p`` and qubit 0 is the
least significant bit of a basis-state index.

The single-qubit matrices are the standard ones::

    X = [[0, 1], [1, 0]]    Y = [[0, -i], [i, 0]]    Z = [[1, 0], [0, -1]]

so products reduce as ``XY = iZ``, ``YZ = iX``, ``ZX = iY``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

from .exceptions import DomainError, ResourceError

__all__ = [
    "LETTERS",
    "PAULI_MATRICES",
    "ZERO_TOL",
    "RECONSTRUCTION_CAP",
    "PauliSum",
    "GateCost",
    "multiply_words",
    "pauli_decompose",
    "pauli_laplacian",
    "projector_sum",
    "simplify",
    "pauli_to_matrix",
    "gate_cost",
]

LETTERS = "IXYZ"
ZERO_TOL = 1e-14
RECONSTRUCTION_CAP = 10

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# (a, b) -> (phase, c) with a @ b == phase * c
_PRODUCT = {}
for _a, _b in product(LETTERS, repeat=2):
    _m = PAULI_MATRICES[_a] @ PAULI_MATRICES[_b]
    for _c in LETTERS:
        _phase = np.trace(PAULI_MATRICES[_c].conj().T @ _m) / 2
        if abs(_phase) > 0.5:
            _PRODUCT[_a, _b] = (complex(np.round(_phase.real) + 1j * np.round(_phase.imag)), _c)
            break

Word = Union[str, Sequence[str]]


def multiply_words(a: str, b: str) -> tuple[complex, str]:
    """Operator product ``a @ b`` of two equal-length words as ``(phase, word)``."""
    if len(a) != len(b):
        raise DomainError(f"word lengths differ: {a!r} vs {b!r}")
    phase = 1 + 0j
    out = []
    for x, y in zip(a, b):
        p, c = _PRODUCT[x, y]
        phase *= p
        out.append(c)
    return phase, "".join(out)


def _reduce_word(word: Word) -> tuple[complex, str]:
    if isinstance(word, str):
        return 1 + 0j, word
    phase, acc = 1 + 0j, None
    for w in word:
        if acc is None:
            acc = w
        else:
            p, acc = multiply_words(acc, w)
            phase *= p
    return phase, acc


@dataclass(frozen=True)
class PauliSum:
    """Linear combination of Pauli words with complex coefficients.

    ``terms`` holds ``(coefficient, word)`` pairs.  A word may also be given
    as a sequence of words, read as their operator product; :func:`simplify`
    multiplies those out, merges like terms and sorts.
    """

    n_qubits: int
    terms: tuple = ()

    def __post_init__(self):
        if self.n_qubits < 1:
            raise DomainError(f"n_qubits must be positive, got {self.n_qubits}")
        object.__setattr__(self, "terms", tuple((complex(c), w) for c, w in self.terms))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[complex, Word]], n_qubits: int | None = None) -> "PauliSum":
        terms = list(terms)
        if n_qubits is None:
            if not terms:
                raise DomainError("cannot infer n_qubits from an empty term list")
            w = terms[0][1]
            n_qubits = len(w if isinstance(w, str) else w[0])
        return simplify(cls(n_qubits, tuple(terms)))

    @classmethod
    def identity(cls, n_qubits: int, coeff: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, ((coeff, "I" * n_qubits),))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def words(self) -> list[str]:
        return [w for _, w in self.terms]

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([c for c, _ in self.terms], dtype=complex)

    def as_dict(self) -> dict[str, complex]:
        return {w: c for c, w in simplify(self).terms}

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return all(abs(c.imag) <= tol for c, _ in simplify(self).terms)

    def hermitian_part(self) -> "PauliSum":
        """``(H + H^dagger) / 2``: real parts of the coefficients."""
        return simplify(PauliSum(self.n_qubits, tuple((c.real, w) for c, w in self.terms)))

    def _check(self, other: "PauliSum"):
        if other.n_qubits != self.n_qubits:
            raise DomainError(f"qubit counts differ: {self.n_qubits} vs {other.n_qubits}")

    def __add__(self, other: "PauliSum") -> "PauliSum":
        self._check(other)
        return simplify(PauliSum(self.n_qubits, self.terms + other.terms))

    def __neg__(self) -> "PauliSum":
        return PauliSum(self.n_qubits, tuple((-c, w) for c, w in self.terms))

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PauliSum):
            self._check(other)
            return simplify(PauliSum(
                self.n_qubits,
                tuple((a * b, (u, v)) for a, u in self.terms for b, v in other.terms),
            ))
        return simplify(PauliSum(self.n_qubits, tuple((other * c, w) for c, w in self.terms)))

    def __rmul__(self, scalar):
        return self * scalar

    def __eq__(self, other):
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.n_qubits == other.n_qubits and simplify(self).terms == simplify(other).terms

    def __hash__(self):
        return hash((self.n_qubits, self.terms))

    def allclose(self, other: "PauliSum", atol: float = 1e-12) -> bool:
        a, b = self.as_dict(), other.as_dict()
        return self.n_qubits == other.n_qubits and all(
            abs(a.get(w, 0) - b.get(w, 0)) <= atol for w in set(a) | set(b)
        )

    # -- serialisation --------------------------------------------------------

    def to_text(self) -> str:
        """One ``(<re>,<im>) <letters>`` line per term."""
        return "\n".join(f"({_fmt(c.real)},{_fmt(c.imag)}) {w}" for c, w in self.terms)

    @classmethod
    def from_text(cls, text: str, n_qubits: int | None = None) -> "PauliSum":
        terms = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            num, word = line.rsplit(" ", 1)
            re, im = num.strip("()").split(",")
            terms.append((complex(float(re), float(im)), word))
        if n_qubits is None and not terms:
            raise DomainError("empty Pauli text needs an explicit n_qubits")
        return cls(n_qubits or len(terms[0][1]), tuple(terms))

    def to_json(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "terms": [{"re": c.real, "im": c.imag, "word": w} for c, w in self.terms],
        }

    @classmethod
    def from_json(cls, data) -> "PauliSum":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["n_qubits"], tuple((complex(t["re"], t["im"]), t["word"]) for t in data["terms"]))

    def __str__(self):
        return self.to_text()


def _fmt(x: float) -> str:
    return repr(float(x) + 0.0)  # folds -0.0 into 0.0


def simplify(s: PauliSum, tol: float = ZERO_TOL) -> PauliSum:
    """Reduce products, merge like terms, drop ``|c| < tol`` and sort.

    Canonical order is lexicographic on the letters with ``I < X < Y < Z``.
    """
    merged: dict[str, complex] = {}
    for c, w in s.terms:
        phase, word = _reduce_word(w)
        if len(word) != s.n_qubits or any(ch not in LETTERS for ch in word):
            raise DomainError(f"invalid word {word!r} for {s.n_qubits} qubits")
        merged[word] = merged.get(word, 0) + phase * c
    terms = tuple(
        (c, w) for w, c in sorted(merged.items(), key=lambda kv: _sort_key(kv[0])) if abs(c) >= tol
    )
    return PauliSum(s.n_qubits, terms)


def _sort_key(word: str):
    return tuple(LETTERS.index(ch) for ch in word)


# -- decomposition ------------------------------------------------------------


def _decompose_tensor(m: np.ndarray) -> np.ndarray:
    """Pauli coefficients of ``m`` as an array of shape ``(4,) * k``.

    ``m`` is split into quadrants ``A B / C D`` and written as
    ``C1 (x) A + C2 (x) B + C3 (x) C + C4 (x) D`` with the constructor matrices

        C1 = (I + Z)/2    C2 = (X + ZX)/2 = (X + iY)/2
        C3 = (X - ZX)/2 = (X - iY)/2    C4 = (I - Z)/2

    and each quadrant is decomposed the same way.  The recursion bottoms out at
    1x1 blocks, so the last level is exactly a combination of the C's.
    """
    if m.shape[0] == 1:
        return np.asarray(m[0, 0], dtype=complex)
    h = m.shape[0] // 2
    a, b, c, d = (_decompose_tensor(q) for q in (m[:h, :h], m[:h, h:], m[h:, :h], m[h:, h:]))
    # C1 (x) A: I gets A/2, Z gets A/2; C4 (x) D: I gets D/2, Z gets -D/2
    # C2 (x) B: X gets B/2, Y gets iB/2; C3 (x) C: X gets C/2, Y gets -iC/2
    return np.stack([
        0.5 * (a + d),
        0.5 * (b + c),
        0.5j * (b - c),
        0.5 * (a - d),
    ])


def _check_dim(dim: int) -> int:
    if dim < 2 or dim & (dim - 1):
        raise DomainError(f"matrix dimension must be a power of two >= 2, got {dim}")
    return dim.bit_length() - 1


def _tensor_to_sum(coeffs: np.ndarray, n_qubits: int, tol: float = ZERO_TOL) -> PauliSum:
    flat = coeffs.reshape(-1)
    nz = np.flatnonzero(np.abs(flat) >= tol)
    terms = []
    for idx in nz:
        letters = []
        rem = int(idx)
        for _ in range(n_qubits):
            letters.append(LETTERS[rem & 3])
            rem >>= 2
        terms.append((complex(flat[idx]), "".join(reversed(letters))))
    # flat index order is already lexicographic in I < X < Y < Z
    return PauliSum(n_qubits, tuple(terms))


def pauli_decompose(m) -> PauliSum:
    """Compile a ``2**k x 2**k`` matrix into a simplified :class:`PauliSum`."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {m.shape}")
    n = _check_dim(m.shape[0])
    return _tensor_to_sum(_decompose_tensor(m), n)


def projector_sum(index: int, n_qubits: int) -> PauliSum:
    """Pauli form of the single-entry matrix with a 1 at ``(index, index)``.

    Each qubit contributes ``C1 = (I+Z)/2`` when its bit is 0 and
    ``C4 = (I-Z)/2`` when it is 1.
    """
    if not 0 <= index < 2**n_qubits:
        raise DomainError(f"index {index} out of range for {n_qubits} qubits")
    terms = []
    bits = [(index >> (n_qubits - 1 - p)) & 1 for p in range(n_qubits)]
    for zs in product((False, True), repeat=n_qubits):
        sign = 1
        for bit, z in zip(bits, zs):
            if z and bit:
                sign = -sign
        terms.append((sign / 2**n_qubits, "".join("Z" if z else "I" for z in zs)))
    return PauliSum(n_qubits, tuple(terms))


def pauli_laplacian(adjacency_sum: PauliSum, degrees: Sequence[float]) -> PauliSum:
    """``-P(A) + sum_i deg_i P(1_i)`` for a degree sequence padded to ``2**n``."""
    n = adjacency_sum.n_qubits
    if len(degrees) != 2**n:
        raise DomainError(f"expected {2**n} degrees, got {len(degrees)}")
    terms = list((-adjacency_sum).terms)
    for i, d in enumerate(degrees):
        if d:
            terms.extend((d * c, w) for c, w in projector_sum(i, n).terms)
    return simplify(PauliSum(n, tuple(terms)))


def pauli_to_matrix(s: PauliSum, cap: int = RECONSTRUCTION_CAP) -> np.ndarray:
    """Dense ``sum_t c_t kron(word_t)``; refuses more than ``cap`` qubits."""
    if s.n_qubits > cap:
        raise ResourceError(f"{s.n_qubits} qubits exceeds the reconstruction cap of {cap}")
    dim = 2**s.n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for c, w in simplify(s).terms:
        op = np.ones((1, 1), dtype=complex)
        for ch in w:
            op = np.kron(op, PAULI_MATRICES[ch])
        out += c * op
    return out


class GateCost(NamedTuple):
    term_count: int
    max_locality: int
    gate_estimate: int


def gate_cost(s: PauliSum) -> GateCost:
    """Term count, maximum locality and a circuit gate estimate.

    A term of locality ``k >= 1`` is charged ``4k - 1`` gates (basis changes
    in and out, a CNOT ladder down and up, one Z rotation); the identity
    term is charged 1.
    """
    locs = [sum(ch != "I" for ch in w) for _, w in s.terms]
    gates = sum(4 * k - 1 if k else 1 for k in locs)
    return GateCost(len(locs), max(locs, default=0), gates)
