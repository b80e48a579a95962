"""Graph spectra with a variational quantum eigensolver on a statevector simulator.

Graph matrices are compiled into Pauli-operator sums, minimised (or
maximised) over a layered RX/RZ + CNOT ansatz with Nelder-Mead, and checked
against dense classical eigendecomposition.
"""

from .exceptions import DomainError, FitError, OptimizerError, ResourceError
from .graph import (
    Graph,
    MatrixKind,
    adjacency_matrix,
    degrees,
    generate_random_graph,
    graph_matrix,
    laplacian_matrix,
    padded_dim,
    parse_graph,
    read_graph,
    write_graph,
)
from .oracle import (
    FitReport,
    classical_eig_symmetric,
    fit_exponential,
    fit_polynomial,
    real_part_spectrum,
    symmetric_part,
)
from .optimize import nelder_mead
from .pauli import (
    GateCost,
    PauliSum,
    gate_cost,
    pauli_decompose,
    pauli_laplacian,
    pauli_to_matrix,
    simplify,
)
from .simulator import (
    AnsatzConfig,
    StateVector,
    apply_ansatz,
    expectation_exact,
    expectation_sampled,
)
from .vqe import SpectrumResult, VqeConfig, VqeResult, deflate, full_spectrum, vqe_max, vqe_min

__version__ = "0.1.0"
