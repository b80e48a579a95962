"""Full spectrum by repeated deflation.

Each step finds an extreme eigenpair with VQE and removes it from the matrix,
so later steps see the remaining spectrum.
"""

import numpy as np

from graphvqe import Graph, VqeConfig, classical_eig_symmetric, full_spectrum, laplacian_matrix

cfg = VqeConfig(layers=3, restarts=3, seed=0)

for name, m in [
    ("diag(5,2,1,0)", np.diag([5.0, 2.0, 1.0, 0.0])),
    ("K4 adjacency", np.ones((4, 4)) - np.eye(4)),
    ("C4 Laplacian", laplacian_matrix(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))),
]:
    spec = full_spectrum(m, cfg=cfg)
    print(f"{name:14s} vqe  {np.round(spec.eigenvalues, 4)}")
    print(f"{'':14s} eigh {np.round(classical_eig_symmetric(m), 4)}")
