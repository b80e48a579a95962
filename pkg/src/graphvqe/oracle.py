"""Classical reference values: dense eigendecomposition and curve fits."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError, FitError

__all__ = [
    "FitReport",
    "classical_eig_symmetric",
    "symmetric_part",
    "real_part_spectrum",
    "fit_polynomial",
    "fit_exponential",
    "r_squared",
]

SYMMETRY_TOL = 1e-12


def classical_eig_symmetric(m, return_vectors: bool = False):
    """Eigenvalues of a real symmetric (or complex Hermitian) matrix, descending.

    With ``return_vectors`` the orthonormal eigenvectors come back as the
    columns of a second array, in the same order.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {m.shape}")
    if np.max(np.abs(m - m.conj().T), initial=0.0) > SYMMETRY_TOL:
        raise DomainError("matrix is not symmetric")
    w, v = np.linalg.eigh(m)
    w, v = w[::-1], v[:, ::-1]
    return (w, v) if return_vectors else w


def symmetric_part(m) -> np.ndarray:
    m = np.asarray(m)
    return (m + m.T) / 2


def real_part_spectrum(m) -> np.ndarray:
    """Real parts of the (possibly complex) eigenvalues of ``m``, descending."""
    return np.sort(np.linalg.eigvals(np.asarray(m)).real)[::-1]


@dataclass
class FitReport:
    """Least-squares fit summary.

    ``coefficients`` are ascending powers for a polynomial and ``(a, b)`` for
    ``y = a * b**x``.  For exponential fits ``r_squared`` is measured on ``y``
    itself and ``r_squared_log`` on ``ln y``.
    """

    model: str
    degree_or_base: float
    coefficients: list
    r_squared: float
    residuals: list = field(default_factory=list)
    r_squared_log: float | None = None

    def predict(self, x):
        x = np.asarray(x, dtype=float)
        if self.model == "polynomial":
            return np.polynomial.polynomial.polyval(x, self.coefficients)
        a, b = self.coefficients
        return a * b**x

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "degree_or_base": self.degree_or_base,
            "coefficients": list(self.coefficients),
            "r_squared": self.r_squared,
        }


def r_squared(y, y_hat) -> float:
    """``1 - SS_res / SS_tot``; for constant ``y`` it is 1 on an exact fit, else 0."""
    y, y_hat = np.asarray(y, dtype=float), np.asarray(y_hat, dtype=float)
    ss_res = float(np.sum((y - y_hat) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        return 1.0 if ss_res <= 1e-12 * max(1.0, float(np.sum(y**2))) else 0.0
    return 1.0 - ss_res / ss_tot


def _lstsq(design, y):
    if np.linalg.matrix_rank(design) < design.shape[1]:
        raise FitError("design matrix is rank deficient")
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return coef


def fit_polynomial(xs, ys, degree: int) -> FitReport:
    xs, ys = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
    if degree < 0:
        raise DomainError("degree must be non-negative")
    if xs.shape != ys.shape or xs.size < degree + 1:
        raise DomainError(f"need matching xs/ys with at least {degree + 1} points")
    design = np.vander(xs, degree + 1, increasing=True)
    coef = _lstsq(design, ys)
    fitted = design @ coef
    return FitReport("polynomial", degree, coef.tolist(), r_squared(ys, fitted), (ys - fitted).tolist())


def fit_exponential(xs, ys) -> FitReport:
    """Fit ``y = a * b**x`` by linear least squares on ``ln y``."""
    xs, ys = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
    if xs.shape != ys.shape or xs.size < 2:
        raise DomainError("need matching xs/ys with at least 2 points")
    if np.any(ys <= 0):
        raise DomainError("exponential fit needs strictly positive y values")
    design = np.vander(xs, 2, increasing=True)
    ln_a, ln_b = _lstsq(design, np.log(ys))
    a, b = float(np.exp(ln_a)), float(np.exp(ln_b))
    fitted = a * b**xs
    return FitReport(
        "exponential",
        b,
        [a, b],
        r_squared(ys, fitted),
        (ys - fitted).tolist(),
        r_squared(np.log(ys), ln_a + ln_b * xs),
    )
