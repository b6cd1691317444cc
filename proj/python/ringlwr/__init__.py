"""Ring-road traffic flow solver and stability laboratory."""

from ._core import (
    DensityField,
    DiagnosticsSeries,
    InequalityCheck,
    KernelMoments,
    KernelSpec,
    ModelKind,
    PeriodicGrid,
    RateFit,
    RateKind,
    SimulationRun,
    SolverConfig,
    SpectralReport,
    SuiteResult,
    __version__,
    check_hardy_littlewood,
    check_nonlinear_poincare,
    check_nonlocal_poincare,
    compute_moments,
    energy,
    evolve_linearized,
    fit_rate,
    fourier_coefficients,
    fourier_mode,
    kl_divergence,
    l2_distance_to_mean,
    lax_friedrichs_step,
    local_linear_exact,
    max_wave_speed,
    mode_damping_oracle,
    nonlocal_average,
    nonlocal_gradient,
    preset_names,
    run,
    run_experiment,
    run_verification,
    stability_constant,
    stagnated,
    theoretical_rate_bound,
    traveling_wave_exact,
    validate_admissibility,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
