"""Seeded experiment sweeps: density, ansatz layers, matrix types, input size, gates.

Every sweep returns a list of :class:`ExperimentRecord` sorted by swept value
and trial.  Trial ``t`` uses seed ``cfg.seed + t`` both for its random graph
and for the solver, so results do not depend on execution order and trials
can run in a process pool (``cfg.workers > 1``).  Runtimes cover the solver
loop only.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace

import numpy as np

from .graph import MatrixKind, generate_random_graph, graph_matrix
from .oracle import (
    FitReport,
    classical_eig_symmetric,
    fit_exponential,
    fit_polynomial,
    real_part_spectrum,
    symmetric_part,
)
from .pauli import gate_cost, pauli_decompose
from .vqe import VqeConfig, vqe_max, vqe_min

__all__ = [
    "ExperimentRecord",
    "GateRecord",
    "SweepConfig",
    "PRESETS",
    "CSV_COLUMNS",
    "run_density_sweep",
    "run_layer_sweep",
    "run_type_sweep",
    "run_size_sweep",
    "run_gate_sweep",
    "run_experiment",
    "records_to_csv",
    "records_from_csv",
    "records_to_json",
    "median_by",
    "mean_by",
    "size_scaling_fits",
]

CSV_COLUMNS = [
    "experiment", "swept_value", "trial", "seed", "n_vertices", "matrix_kind",
    "layers", "shots", "runtime_ms", "estimate", "oracle_value", "abs_error",
]


@dataclass(frozen=True)
class ExperimentRecord:
    experiment: str
    swept_value: object
    trial: int
    seed: int
    n_vertices: int
    matrix_kind: str
    layers: int
    shots: int
    runtime_ms: float
    estimate: float
    oracle_value: float
    abs_error: float = field(default=None)

    def __post_init__(self):
        if self.abs_error is None:
            object.__setattr__(self, "abs_error", abs(self.estimate - self.oracle_value))


@dataclass(frozen=True)
class GateRecord:
    n_vertices: int
    trial: int
    seed: int
    term_count: int
    max_locality: int
    gate_estimate: int
    decompose_ms: float


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of one sweep.  ``values`` is the swept axis."""

    experiment: str
    values: tuple
    n_vertices: int = 4
    trials: int = 20
    trials_per_value: tuple | None = None
    layers: int = 3
    density: float = 0.5
    objective: str = "min"
    shots: int = 0
    restarts: int = 1
    tolerance: float | None = None
    max_iterations: int | None = None
    seed: int = 0
    workers: int = 1

    def vqe_config(self, layers: int, seed: int) -> VqeConfig:
        return VqeConfig(
            layers=layers,
            shots=self.shots,
            max_iterations=self.max_iterations,
            tolerance=self.tolerance,
            restarts=self.restarts,
            seed=seed,
        )


ALL_KINDS = tuple(k.value for k in MatrixKind)

# Parameter tables of the original sweeps.
PRESETS = {
    "density": SweepConfig(
        "density", tuple(np.linspace(0.0, 1.0, 36).tolist()), n_vertices=8, trials=3, layers=3
    ),
    "density-fine": SweepConfig(
        "density", (0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0), n_vertices=4, trials=20, layers=5
    ),
    "layers": SweepConfig("layers", (1, 2, 3, 4, 5, 7, 10, 15, 20), n_vertices=4, trials=20),
    "types": SweepConfig("types", ALL_KINDS, n_vertices=8, trials=5, layers=3, objective="max"),
    "size": SweepConfig(
        "size", (4, 5, 8, 9, 16, 32, 64), trials_per_value=(10, 5, 5, 2, 2, 1, 1), layers=3
    ),
    "gates": SweepConfig("gates", (4, 8, 16, 32, 64, 128, 256), trials=5),
}


# -- single trials -------------------------------------------------------------


def _solve(m: np.ndarray, objective: str, cfg: VqeConfig, n_active: int):
    h = pauli_decompose(m)
    solver = vqe_max if objective == "max" else vqe_min
    return solver(h, cfg, n_active)


def _oracle(m: np.ndarray, objective: str) -> float:
    w = classical_eig_symmetric(symmetric_part(m))
    return float(w[0] if objective == "max" else w[-1])


def _trial(task) -> list[ExperimentRecord]:
    sweep, value, trial = task
    seed = sweep.seed + trial
    n, layers, density = sweep.n_vertices, sweep.layers, sweep.density
    kind = MatrixKind.UNDIRECTED_ADJACENCY
    if sweep.experiment == "density":
        density = float(value)
    elif sweep.experiment == "layers":
        layers = int(value)
    elif sweep.experiment == "types":
        kind = MatrixKind(value)
    elif sweep.experiment == "size":
        n = int(value)
    else:
        raise ValueError(f"unknown experiment {sweep.experiment!r}")

    g = generate_random_graph(n, density, kind.directed, seed)
    m = graph_matrix(g, kind)
    res = _solve(m, sweep.objective, sweep.vqe_config(layers, seed), n)
    common = dict(
        swept_value=value, trial=trial, seed=seed, n_vertices=n, matrix_kind=kind.value,
        layers=layers, shots=sweep.shots, runtime_ms=1e3 * res.wall_time, estimate=res.eigenvalue,
    )
    records = [ExperimentRecord(sweep.experiment, oracle_value=_oracle(m, sweep.objective), **common)]
    if kind.directed:
        spec = real_part_spectrum(m)
        ref = float(spec[0] if sweep.objective == "max" else spec[-1])
        records.append(ExperimentRecord(f"{sweep.experiment}:real-part", oracle_value=ref, **common))
    return records


def _tasks(sweep: SweepConfig):
    per_value = sweep.trials_per_value or (sweep.trials,) * len(sweep.values)
    if len(per_value) != len(sweep.values):
        raise ValueError("trials_per_value must match values")
    return [(sweep, v, t) for v, k in zip(sweep.values, per_value) for t in range(k)]


def _run(sweep: SweepConfig) -> list[ExperimentRecord]:
    tasks = _tasks(sweep)
    if sweep.workers > 1:
        with ProcessPoolExecutor(sweep.workers) as pool:
            chunks = list(pool.map(_trial, tasks))
    else:
        chunks = [_trial(t) for t in tasks]
    order = {v: i for i, v in enumerate(sweep.values)}
    records = [r for chunk in chunks for r in chunk]
    return sorted(records, key=lambda r: (order[r.swept_value], r.trial, r.experiment))


def _preset(name: str, cfg: SweepConfig | None, overrides) -> SweepConfig:
    cfg = cfg or PRESETS[name]
    return replace(cfg, **overrides) if overrides else cfg


def run_density_sweep(cfg: SweepConfig | None = None, **overrides) -> list[ExperimentRecord]:
    """Minimum adjacency eigenvalue of undirected graphs across densities."""
    return _run(_preset("density", cfg, overrides))


def run_layer_sweep(cfg: SweepConfig | None = None, **overrides) -> list[ExperimentRecord]:
    return _run(_preset("layers", cfg, overrides))


def run_type_sweep(cfg: SweepConfig | None = None, **overrides) -> list[ExperimentRecord]:
    """Maximum eigenvalue for each of the five matrix kinds.

    The solver sees ``Re <psi|M|psi>``, i.e. the symmetric part of a directed
    matrix, so directed kinds get two records per trial: ``types`` measured
    against the symmetric part and ``types:real-part`` against the largest
    real part of the true (complex) spectrum.
    """
    return _run(_preset("types", cfg, overrides))


def run_size_sweep(cfg: SweepConfig | None = None, **overrides) -> list[ExperimentRecord]:
    return _run(_preset("size", cfg, overrides))


def run_gate_sweep(cfg: SweepConfig | None = None, **overrides) -> tuple[list[GateRecord], FitReport]:
    """Worst-case gate estimate per vertex count, plus a quadratic fit.

    Only decomposes; no solver runs.  The fit is over the maximum
    ``gate_estimate`` among the ``trials`` random graphs at each size, and is
    ``None`` when fewer than three sizes are swept.
    """
    sweep = _preset("gates", cfg, overrides)
    records = []
    for n in sweep.values:
        for t in range(sweep.trials):
            seed = sweep.seed + t
            g = generate_random_graph(int(n), sweep.density, False, seed)
            start = time.perf_counter()
            h = pauli_decompose(graph_matrix(g, MatrixKind.UNDIRECTED_ADJACENCY))
            elapsed = time.perf_counter() - start
            cost = gate_cost(h)
            records.append(GateRecord(int(n), t, seed, cost.term_count, cost.max_locality, cost.gate_estimate, 1e3 * elapsed))
    worst = [max(r.gate_estimate for r in records if r.n_vertices == n) for n in sweep.values]
    if len(worst) < 3:
        return records, None
    return records, fit_polynomial(list(sweep.values), worst, 2)


def run_experiment(name: str, **overrides):
    runners = {
        "density": lambda: run_density_sweep(**overrides),
        "density-fine": lambda: run_density_sweep(PRESETS["density-fine"], **overrides),
        "layers": lambda: run_layer_sweep(**overrides),
        "types": lambda: run_type_sweep(**overrides),
        "size": lambda: run_size_sweep(**overrides),
        "gates": lambda: run_gate_sweep(**overrides),
    }
    if name not in runners:
        raise ValueError(f"unknown experiment {name!r}; choose from {sorted(runners)}")
    return runners[name]()


# -- aggregation -----------------------------------------------------------------


def _group(records, key, attr):
    out: dict = {}
    for r in records:
        out.setdefault(getattr(r, key), []).append(getattr(r, attr))
    return out


def median_by(records, attr: str, key: str = "swept_value") -> dict:
    return {k: float(np.median(v)) for k, v in _group(records, key, attr).items()}


def mean_by(records, attr: str, key: str = "swept_value") -> dict:
    return {k: float(np.mean(v)) for k, v in _group(records, key, attr).items()}


def size_scaling_fits(records) -> tuple[FitReport, FitReport]:
    """Quadratic and exponential fits of mean runtime against padded size."""
    from .graph import padded_dim

    means = mean_by(
        [replace(r, swept_value=padded_dim(r.n_vertices)) for r in records], "runtime_ms"
    )
    xs = sorted(means)
    ys = [means[x] for x in xs]
    return fit_polynomial(xs, ys, 2), fit_exponential(xs, ys)


# -- serialisation ---------------------------------------------------------------


def _cell(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


def records_to_csv(records, fh=None) -> str:
    buf = io.StringIO()
    cols = CSV_COLUMNS if not records or isinstance(records[0], ExperimentRecord) else [
        f.name for f in fields(records[0])
    ]
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in records:
        w.writerow([_cell(getattr(r, c)) for c in cols])
    text = buf.getvalue()
    if fh is not None:
        fh.write(text)
    return text


def _parse_value(s: str):
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def records_from_csv(text: str) -> list[ExperimentRecord]:
    rows = csv.DictReader(io.StringIO(text))
    out = []
    for row in rows:
        out.append(ExperimentRecord(
            experiment=row["experiment"],
            swept_value=_parse_value(row["swept_value"]),
            trial=int(row["trial"]),
            seed=int(row["seed"]),
            n_vertices=int(row["n_vertices"]),
            matrix_kind=row["matrix_kind"],
            layers=int(row["layers"]),
            shots=int(row["shots"]),
            runtime_ms=float(row["runtime_ms"]),
            estimate=float(row["estimate"]),
            oracle_value=float(row["oracle_value"]),
            abs_error=float(row["abs_error"]),
        ))
    return out


def records_to_json(records) -> str:
    return json.dumps([asdict(r) for r in records], indent=1)
