"""Pauli decomposition of graph matrices.

Builds a small random graph, decomposes its adjacency and Laplacian matrices
into weighted Pauli strings and checks that the sum rebuilds the matrix.
"""

import numpy as np

from graphvqe import (
    MatrixKind,
    gate_cost,
    generate_random_graph,
    graph_matrix,
    pauli_decompose,
    pauli_to_matrix,
)

g = generate_random_graph(5, 0.5, seed=3)
print(f"graph: {g.n_vertices} vertices, {g.n_edges} edges, padded to {g.dim} ({g.n_qubits} qubits)")

for kind in (MatrixKind.UNDIRECTED_ADJACENCY, MatrixKind.UNDIRECTED_LAPLACIAN):
    m = graph_matrix(g, kind)
    h = pauli_decompose(m)
    err = np.max(np.abs(pauli_to_matrix(h) - m))
    print(f"\n{kind.value}: {len(h.terms)} terms, reconstruction error {err:.1e}")
    print(h.to_text())
    print("cost:", gate_cost(h))

# A single directed edge is not Hermitian, so its coefficients are complex.
print("\n[[0,1],[0,0]] ->", pauli_decompose([[0, 1], [0, 0]]).as_dict())
