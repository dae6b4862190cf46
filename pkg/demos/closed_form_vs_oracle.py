"""Cross-check every closed form against the numerical pipeline.

The library carries two independent routes to the same numbers: analytic
expressions per input family, and a truncated-grid simulation that evolves
the joint state, projects on the detector outcome, and reads statistics off
the result.  run_verify sweeps both over a grid and compares field by field.
"""

from heraldkit import run_verify

report = run_verify(preset="full", tolerance=1e-6)

print(f"preset=full tol={report.tolerance}")
print(f"{report.n_passed}/{report.total} checks passed")

worst = max(report.checks, key=lambda c: c.abs_error if c.abs_error != float("inf") else -1.0)
print(
    f"worst field: {worst.scenario} N={worst.n_detected} "
    f"lt/pi={worst.lambda_t_over_pi:.4f} {worst.field}: "
    f"abs {worst.abs_error:.3e}, rel {worst.rel_error:.3e}"
)

assert report.all_passed
