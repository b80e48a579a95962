"""Graphs, seeded random generation and padded adjacency/Laplacian matrices.

Random graphs are drawn with SplitMix64 so that any reimplementation can
reproduce them bit for bit:

* state is a 64-bit unsigned integer initialised to ``seed mod 2**64``;
* each draw adds ``0x9E3779B97F4A7C15`` to the state and mixes it with the
  standard SplitMix64 finaliser;
* a uniform double in ``[0, 1)`` is ``(draw >> 11) * 2**-53``;
* candidate edges are visited row-major, ``i`` outer and ``j`` inner, over
  ``i < j`` for undirected graphs and over all ``i != j`` for directed ones;
  the edge is kept when the uniform draw is ``< density``.

Matrices are padded with zero rows and columns up to the next power of two
(at least 2), so a graph on ``n`` vertices acts on ``ceil(log2(n))`` qubits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .exceptions import DomainError

__all__ = [
    "SplitMix64",
    "Graph",
    "MatrixKind",
    "padded_dim",
    "generate_random_graph",
    "adjacency_matrix",
    "laplacian_matrix",
    "degrees",
    "graph_matrix",
    "read_graph",
    "write_graph",
    "parse_graph",
    "format_graph",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Portable 64-bit generator (Steele, Lea & Flood)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


class MatrixKind(enum.Enum):
    UNDIRECTED_ADJACENCY = "undirected-adjacency"
    DIRECTED_ADJACENCY = "directed-adjacency"
    UNDIRECTED_LAPLACIAN = "undirected-laplacian"
    DIRECTED_LAPLACIAN_INDEGREE = "directed-laplacian-in"
    DIRECTED_LAPLACIAN_OUTDEGREE = "directed-laplacian-out"

    @property
    def directed(self) -> bool:
        return self in (
            MatrixKind.DIRECTED_ADJACENCY,
            MatrixKind.DIRECTED_LAPLACIAN_INDEGREE,
            MatrixKind.DIRECTED_LAPLACIAN_OUTDEGREE,
        )

    @property
    def is_laplacian(self) -> bool:
        return self not in (MatrixKind.UNDIRECTED_ADJACENCY, MatrixKind.DIRECTED_ADJACENCY)


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0 .. n_vertices-1``.

    Undirected edges are stored canonically as ``(i, j)`` with ``i < j``.
    Use :meth:`from_edges` to build one from an arbitrary edge list.
    """

    n_vertices: int
    directed: bool
    edges: frozenset

    def __post_init__(self):
        if self.n_vertices < 1:
            raise DomainError(f"n_vertices must be positive, got {self.n_vertices}")
        for i, j in self.edges:
            if i == j:
                raise DomainError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n_vertices and 0 <= j < self.n_vertices):
                raise DomainError(f"edge ({i}, {j}) outside [0, {self.n_vertices})")
            if not self.directed and i > j:
                raise DomainError(f"undirected edge ({i}, {j}) not in canonical i < j form")

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> "Graph":
        """Build a graph, canonicalising undirected pairs and rejecting duplicates."""
        seen = set()
        for i, j in edges:
            e = (int(i), int(j))
            if not directed:
                e = (min(e), max(e))
            if e in seen:
                raise DomainError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n_vertices, directed, frozenset(seen))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def dim(self) -> int:
        return padded_dim(self.n_vertices)

    @property
    def n_qubits(self) -> int:
        return self.dim.bit_length() - 1

    def is_connected(self) -> bool:
        adj = {v: set() for v in range(self.n_vertices)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices


def padded_dim(n_vertices: int) -> int:
    """Smallest power of two >= ``n_vertices`` (and >= 2)."""
    return max(2, 1 << math.ceil(math.log2(n_vertices)))


def generate_random_graph(n: int, density: float, directed: bool = False, seed: int = 0) -> Graph:
    """Erdos-Renyi graph G(n, density) drawn with :class:`SplitMix64`."""
    if n < 2:
        raise DomainError(f"need at least 2 vertices, got {n}")
    if not 0.0 <= density <= 1.0:
        raise DomainError(f"density must lie in [0, 1], got {density}")
    rng = SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or (not directed and j < i):
                continue
            if rng.random() < density:
                edges.append((i, j))
    return Graph(n, directed, frozenset(edges))


def adjacency_matrix(g: Graph) -> np.ndarray:
    m = np.zeros((g.dim, g.dim))
    for i, j in g.edges:
        m[i, j] = 1.0
        if not g.directed:
            m[j, i] = 1.0
    return m


def degrees(g: Graph, kind: MatrixKind = MatrixKind.UNDIRECTED_LAPLACIAN) -> np.ndarray:
    """Per-vertex degree used on the Laplacian diagonal, padded with zeros."""
    _check_kind(g, kind)
    a = adjacency_matrix(g)
    if kind is MatrixKind.DIRECTED_LAPLACIAN_INDEGREE:
        return a.sum(axis=0)
    return a.sum(axis=1)


def laplacian_matrix(g: Graph, kind: MatrixKind = MatrixKind.UNDIRECTED_LAPLACIAN) -> np.ndarray:
    """``diag(deg) - A`` where ``deg`` is the degree, indegree or outdegree per ``kind``."""
    if not kind.is_laplacian:
        raise DomainError(f"{kind.value} is not a Laplacian kind")
    return np.diag(degrees(g, kind)) - adjacency_matrix(g)


def graph_matrix(g: Graph, kind: MatrixKind) -> np.ndarray:
    _check_kind(g, kind)
    if kind.is_laplacian:
        return laplacian_matrix(g, kind)
    return adjacency_matrix(g)


def _check_kind(g: Graph, kind: MatrixKind) -> None:
    if kind.directed != g.directed:
        which = "directed" if g.directed else "undirected"
        raise DomainError(f"matrix kind {kind.value} does not apply to a {which} graph")


# -- text format ------------------------------------------------------------


def format_graph(g: Graph) -> str:
    lines = [f"{g.n_vertices} {'directed' if g.directed else 'undirected'}"]
    lines += [f"{i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the ``<n> <directed|undirected>`` header plus ``<i> <j>`` lines."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[1] not in ("directed", "undirected"):
        raise DomainError(f"bad header line: {lines[0]!r}")
    try:
        n = int(head[0])
        pairs = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise DomainError(f"bad edge line: {ln!r}")
            pairs.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return Graph.from_edges(n, pairs, directed=head[1] == "directed")


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g))
