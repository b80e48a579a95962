"""Small versions of the experiment sweeps, with fits.

The full presets take minutes; here every sweep is trimmed so the script
finishes quickly.  Pass the same names to ``graphvqe experiment`` for the
full runs.
"""

from graphvqe.experiments import (
    mean_by,
    median_by,
    run_density_sweep,
    run_gate_sweep,
    run_layer_sweep,
    run_size_sweep,
    size_scaling_fits,
)

recs = run_density_sweep(n_vertices=4, trials=4, layers=3, values=(0.0, 0.5, 1.0))
print("density -> median |error|:", {k: f"{v:.1e}" for k, v in median_by(recs, "abs_error").items()})
print("density -> median ms:     ", {k: round(v, 1) for k, v in median_by(recs, "runtime_ms").items()})

recs = run_layer_sweep(values=(1, 3, 5), trials=4)
print("\nlayers -> median ms:", {k: round(v, 1) for k, v in median_by(recs, "runtime_ms").items()})

records, fit = run_gate_sweep(values=(4, 8, 16, 32, 64), trials=3)
print(f"\ngate estimate ~ quadratic in N: R^2 = {fit.r_squared:.4f}, coefficients {fit.coefficients}")

recs = run_size_sweep(values=(4, 8, 16), trials_per_value=(3, 2, 1))
print("\nsize -> mean ms:", {k: round(v, 1) for k, v in mean_by(recs, "runtime_ms").items()})
quad, expo = size_scaling_fits(recs)
print(f"quadratic R^2 {quad.r_squared:.3f}, exponential R^2 {expo.r_squared:.3f} (base {expo.degree_or_base:.3f})")
