"""Nelder-Mead downhill simplex minimisation."""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .exceptions import DomainError, OptimizerError

__all__ = ["NelderMeadResult", "nelder_mead"]


class NelderMeadResult(NamedTuple):
    x: np.ndarray
    fun: float
    iterations: int
    evaluations: int
    converged: bool


def nelder_mead(
    f: Callable[[np.ndarray], float],
    x0,
    tol: float = 1e-6,
    max_iter: int = 1000,
    step: float = 0.25,
    alpha: float = 1.0,
    gamma: float = 2.0,
    rho: float = 0.5,
    sigma: float = 0.5,
) -> NelderMeadResult:
    """Minimise ``f`` from ``x0``.

    The initial simplex is ``x0`` plus ``x0 + step * e_i`` for each axis.
    Iteration stops once the sample standard deviation of the simplex
    values drops below ``tol`` or after ``max_iter`` iterations.  A small
    spread is confirmed by one shrink toward the best vertex before
    stopping, since vertices placed symmetrically about a minimum can have
    equal values while the simplex is still wide.

    Raises:
        OptimizerError: ``f`` returned NaN or an infinity.
    """
    x0 = np.asarray(x0, dtype=float).ravel()
    dim = x0.size
    if dim < 1:
        raise DomainError("x0 must have at least one coordinate")
    if tol <= 0 or max_iter < 1:
        raise DomainError("tol must be positive and max_iter at least 1")

    n_eval = 0

    def call(x):
        nonlocal n_eval
        n_eval += 1
        v = float(f(x))
        if not np.isfinite(v):
            raise OptimizerError(f"objective returned {v}", point=x.copy())
        return v

    simplex = np.vstack([x0, x0 + step * np.eye(dim)])
    fvals = np.array([call(x) for x in simplex])

    def shrink():
        best = simplex[0]
        for i in range(1, dim + 1):
            simplex[i] = best + sigma * (simplex[i] - best)
            fvals[i] = call(simplex[i])

    it = 0
    converged = False
    pending = False
    while True:
        order = np.argsort(fvals, kind="stable")
        simplex, fvals = simplex[order], fvals[order]
        if np.std(fvals, ddof=1) < tol:
            if pending:
                converged = True
                break
            pending = True
            shrink()
            continue
        pending = False
        if it >= max_iter:
            break
        it += 1

        centroid = simplex[:-1].mean(axis=0)
        worst, f_worst = simplex[-1], fvals[-1]

        xr = centroid + alpha * (centroid - worst)
        fr = call(xr)
        if fvals[0] <= fr < fvals[-2]:
            simplex[-1], fvals[-1] = xr, fr
            continue

        if fr < fvals[0]:
            xe = centroid + gamma * (xr - centroid)
            fe = call(xe)
            if fe < fr:
                simplex[-1], fvals[-1] = xe, fe
            else:
                simplex[-1], fvals[-1] = xr, fr
            continue

        if fr < f_worst:
            xc = centroid + rho * (xr - centroid)
            fc = call(xc)
            if fc <= fr:
                simplex[-1], fvals[-1] = xc, fc
                continue
        else:
            xc = centroid + rho * (worst - centroid)
            fc = call(xc)
            if fc < f_worst:
                simplex[-1], fvals[-1] = xc, fc
                continue

        shrink()

    return NelderMeadResult(simplex[0].copy(), float(fvals[0]), it, n_eval, converged)
