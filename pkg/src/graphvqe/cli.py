"""Command-line front end.

Exit status is 0 on success, 1 when an input is out of domain and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import experiments as exp
from .exceptions import DomainError, FitError, OptimizerError, ResourceError
from .graph import Graph, MatrixKind, generate_random_graph, graph_matrix, read_graph, write_graph
from .oracle import classical_eig_symmetric, real_part_spectrum, symmetric_part
from .pauli import pauli_decompose
from .vqe import VqeConfig, full_spectrum, vqe_max, vqe_min

MATRIX_CHOICES = ("adjacency", "laplacian", "laplacian-in", "laplacian-out")


def resolve_kind(g: Graph, name: str) -> MatrixKind:
    if name == "adjacency":
        return MatrixKind.DIRECTED_ADJACENCY if g.directed else MatrixKind.UNDIRECTED_ADJACENCY
    if name == "laplacian":
        if g.directed:
            raise DomainError("directed graphs need --matrix laplacian-in or laplacian-out")
        return MatrixKind.UNDIRECTED_LAPLACIAN
    if not g.directed:
        raise DomainError(f"--matrix {name} needs a directed graph")
    if name == "laplacian-in":
        return MatrixKind.DIRECTED_LAPLACIAN_INDEGREE
    return MatrixKind.DIRECTED_LAPLACIAN_OUTDEGREE


def _num(v: float) -> str:
    return f"{round(float(v), 10) + 0.0:.10g}"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _load(args):
    g = read_graph(args.input)
    return g, graph_matrix(g, resolve_kind(g, args.matrix))


def _vqe_config(args) -> VqeConfig:
    return VqeConfig(
        layers=args.layers,
        shots=args.shots,
        max_iterations=args.max_iter,
        tolerance=args.tol,
        restarts=args.restarts,
        seed=args.seed,
    )


def cmd_random(args):
    g = generate_random_graph(args.n, args.density, args.directed, args.seed)
    if args.out:
        write_graph(g, args.out)
    else:
        from .graph import format_graph

        sys.stdout.write(format_graph(g))


def cmd_decompose(args):
    _, m = _load(args)
    h = pauli_decompose(m)
    text = json.dumps(h.to_json()) if args.format == "json" else h.to_text()
    _emit(text, args.out)


def cmd_eigen(args):
    g, m = _load(args)
    h = pauli_decompose(m)
    if args.shots and not h.is_hermitian():
        h = h.hermitian_part()
    solver = vqe_max if args.objective == "max" else vqe_min
    res = solver(h, _vqe_config(args), g.n_vertices)
    text = json.dumps(res.to_json()) if args.format == "json" else _num(res.eigenvalue)
    _emit(text, args.out)


def cmd_spectrum(args):
    _, m = _load(args)
    res = full_spectrum(m, args.k, _vqe_config(args))
    if args.format == "json":
        text = json.dumps(res.to_json())
    else:
        text = " ".join(_num(v) for v in res.eigenvalues)
    _emit(text, args.out)


def cmd_oracle(args):
    g, m = _load(args)
    if g.directed:
        sym = classical_eig_symmetric(symmetric_part(m))
        lines = [
            "symmetric-part: " + " ".join(_num(v) for v in sym),
            "real-part: " + " ".join(_num(v) for v in real_part_spectrum(m)),
        ]
        text = "\n".join(lines)
    else:
        text = " ".join(_num(v) for v in classical_eig_symmetric(m))
    _emit(text, args.out)


def cmd_experiment(args):
    overrides = {}
    for name in ("trials", "seed", "layers", "shots", "restarts", "workers"):
        v = getattr(args, name)
        if v is not None:
            overrides[name] = v
    if args.n is not None:
        overrides["n_vertices"] = args.n
    if args.tol is not None:
        overrides["tolerance"] = args.tol
    if args.max_iter is not None:
        overrides["max_iterations"] = args.max_iter
    if args.name in ("gates",):
        for k in ("layers", "shots", "restarts", "workers", "tolerance", "max_iterations"):
            overrides.pop(k, None)
    result = exp.run_experiment(args.name, **overrides)
    fit = None
    if args.name == "gates":
        records, fit = result
    else:
        records = result
    if args.format == "json":
        payload = json.loads(exp.records_to_json(records))
        if fit is not None:
            payload = {"records": payload, "fit": fit.to_json()}
        text = json.dumps(payload, indent=1)
    else:
        text = exp.records_to_csv(records)
    _emit(text, args.out)
    if args.dat:
        _write_dat(records, args.dat)


def _write_dat(records, path):
    """Whitespace table of per-value medians, readable by gnuplot."""
    if records and isinstance(records[0], exp.GateRecord):
        rows = {}
        for r in records:
            rows[r.n_vertices] = max(rows.get(r.n_vertices, 0), r.gate_estimate)
        lines = ["# n_vertices worst_gate_estimate"] + [f"{k} {v}" for k, v in sorted(rows.items())]
    else:
        main = [r for r in records if ":" not in r.experiment]
        err = exp.median_by(main, "abs_error")
        rt = exp.median_by(main, "runtime_ms")
        lines = ["# swept_value median_runtime_ms median_abs_error"]
        lines += [f"{k} {rt[k]!r} {err[k]!r}" for k in err]
    Path(path).write_text("\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphvqe", description="Graph spectra with a variational eigensolver.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, matrix=True):
        if matrix:
            sp.add_argument("--input", required=True, metavar="PATH")
            sp.add_argument("--matrix", choices=MATRIX_CHOICES, default="adjacency")
        sp.add_argument("--out", metavar="PATH")
        sp.add_argument("--format", choices=("csv", "json", "text"), default="text")

    def solver(sp, defaults=True):
        d = (lambda v: v) if defaults else (lambda v: None)
        sp.add_argument("--layers", type=int, default=d(3))
        sp.add_argument("--shots", type=int, default=d(0))
        sp.add_argument("--seed", type=int, default=d(0))
        sp.add_argument("--tol", type=float)
        sp.add_argument("--max-iter", type=int, dest="max_iter")
        sp.add_argument("--restarts", type=int, default=d(1))

    sp = sub.add_parser("random", help="generate a seeded random graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--density", type=float, default=0.5)
    sp.add_argument("--directed", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("decompose", help="print the Pauli decomposition of a graph matrix")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("eigen", help="estimate the min or max eigenvalue")
    common(sp)
    sp.add_argument("--objective", choices=("min", "max"), default="min")
    solver(sp)
    sp.set_defaults(func=cmd_eigen)

    sp = sub.add_parser("spectrum", help="estimate the spectrum by deflation")
    common(sp)
    sp.add_argument("-k", type=int)
    solver(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("oracle", help="classical eigenvalues, descending")
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("experiment", help="run a sweep and emit CSV or JSON records")
    sp.add_argument("name", choices=("density", "density-fine", "layers", "types", "size", "gates"))
    sp.add_argument("--trials", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--workers", type=int)
    sp.add_argument("--dat", metavar="PATH", help="also write a gnuplot-ready table of medians")
    sp.add_argument("--out", metavar="PATH")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    solver(sp, defaults=False)
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (DomainError, ResourceError, OptimizerError, FitError, OSError) as exc:
        print(f"graphvqe: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
