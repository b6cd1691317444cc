#pragma once

#include <functional>
#include <random>
#include <vector>

#include "ringlwr/grid.hpp"
#include "ringlwr/kernel.hpp"

namespace ringlwr {

/**
 * Closed-form entropy solution of the local model for ρ₀(x) = βx on the ring.
 * A rarefaction fan opens at the wrap discontinuity; at t = 1/(2β) the ramp
 * collapses into a shock that travels at speed 1−β with endpoints
 * ρ_l = β/2 − 1/(4t) and ρ_r = β/2 + 1/(4t).
 */
struct LocalLinearSolution {
  explicit LocalLinearSolution(double beta);

  double eval(double x, double t) const;
  double shock_time() const;               // 1/(2β); +inf when β = 0
  double shock_position(double t) const;   // defined for t > shock_time
  double left_state(double t) const { return 0.5 * beta - 0.25 / t; }
  double right_state(double t) const { return 0.5 * beta + 0.25 / t; }

  double beta;
};

double local_linear_exact(double beta, double x, double t);

/// ρ₀(x − (1−ρ̄)t) by periodic shift; trigonometric interpolation when the
/// shift is not grid-aligned. Requires δ = 1/m and ρ₀ periodic with period δ
/// (checked against the shifted copy at 1e-10).
DensityField traveling_wave_exact(const DensityField& rho0, double delta, double t);

struct InequalityCheck {
  double lhs;
  double rhs;
  bool holds;
};

/// ∫ ∂ₓρ · Dρ dx  ≥  α ∫ (ρ−ρ̄)² dx  (within 1e-8).
/// The field is treated as its trigonometric interpolant; the look-ahead
/// gradient is applied per mode with coefficients from this module's own
/// Gauss-Legendre quadrature, independent of the spectral module.
InequalityCheck check_nonlocal_poincare(const DensityField& rho, const KernelSpec& spec,
                                        double alpha);

/// ∫ ρ ∂ₓρ · Dρ dx  ≥  min(ρ) ∫ ∂ₓρ · Dρ dx  (within 1e-8); needs min ρ ≥ 0.
InequalityCheck check_nonlinear_poincare(const DensityField& rho, const KernelSpec& spec);

/// Σ f(ρ_i) ρ_{i+shift mod N}  ≤  Σ f(ρ_i) ρ_i + 1e-12 for non-decreasing f.
bool check_hardy_littlewood(const std::vector<double>& rho_samples,
                            const std::function<double(double)>& f_monotone, int shift);

/// Per-mode damping 2πk·b(k) measured through this module's quadrature route;
/// cross-checks the spectral module.
double mode_damping_oracle(const KernelSpec& spec, int k);

/// Random band-limited density: offset 0.5, modes 1..8 with coefficients
/// uniform in [−0.1, 0.1], redrawn until min ρ > 0.01.
struct TrigPoly {
  double offset = 0.5;
  std::vector<double> cos_coeff;  // k = 1..K
  std::vector<double> sin_coeff;

  double eval(double x) const;
  DensityField to_field(const PeriodicGrid& grid) const;
};

TrigPoly random_positive_trig_poly(std::mt19937& rng);

}  // namespace ringlwr
