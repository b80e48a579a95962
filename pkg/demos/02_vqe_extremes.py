"""Smallest and largest eigenvalues with VQE.

Compares the variational estimates against numpy's eigh for K4 and for a
random 8-vertex graph.
"""

import numpy as np

from graphvqe import (
    VqeConfig,
    adjacency_matrix,
    classical_eig_symmetric,
    generate_random_graph,
    pauli_decompose,
    vqe_max,
    vqe_min,
)

cfg = VqeConfig(layers=3, restarts=3, seed=1)

k4 = np.ones((4, 4)) - np.eye(4)
h = pauli_decompose(k4)
lo, hi = vqe_min(h, cfg), vqe_max(h, cfg)
print(f"K4: min {lo.eigenvalue:+.6f} (exact -1), max {hi.eigenvalue:+.6f} (exact 3)")
print(f"    {lo.evaluations} evaluations, {1e3 * lo.wall_time:.1f} ms for the minimum")

g = generate_random_graph(8, 0.5, seed=11)
m = adjacency_matrix(g)
exact = classical_eig_symmetric(m)
res = vqe_max(pauli_decompose(m), cfg)
print(f"\nrandom 8-vertex graph ({g.n_edges} edges)")
print(f"  vqe max {res.eigenvalue:.6f}  eigh max {exact[0]:.6f}  error {abs(res.eigenvalue - exact[0]):.1e}")
# every evaluated energy lies inside the spectrum
print(f"  history range [{res.history.min():.4f}, {res.history.max():.4f}] within [{exact[-1]:.4f}, {exact[0]:.4f}]")
