#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ringlwr/grid.hpp"
#include "ringlwr/kernel.hpp"

namespace ringlwr {

/// Time-stamped run monitors. All columns share the same length; kl is NaN
/// whenever the density was not strictly positive at the record time.
struct DiagnosticsSeries {
  std::vector<double> times;
  std::vector<double> energy;
  std::vector<double> l2_error;
  std::vector<double> kl;
  std::vector<double> mass;
  std::vector<double> min_rho;
  std::vector<double> max_rho;
  std::vector<std::int64_t> step_index;

  std::size_t size() const { return times.size(); }
};

enum class RateKind { Exponential, Linear };

struct RateFit {
  RateKind kind;
  double rate;       // Exponential: error ≈ C e^{-rate t}; Linear: error ≈ C t^{-rate}
  double r_squared;
  std::pair<double, double> window;
};

/// E = ½ ∫ (ρ − ρ̄)² dx.
double energy(const DensityField& rho);

/// V = ∫ ρ ln(ρ/ρ̄) dx. Throws std::domain_error unless min ρ > 0.
double kl_divergence(const DensityField& rho);

/// Appends one record at time t after `step` completed solver steps.
void record(DiagnosticsSeries& series, double t, const DensityField& rho,
            std::int64_t step);

/// Least-squares decay rate of the l2_error column over the window, using
/// samples with error above the 1e-13 roundoff floor (at least 10 required).
RateFit fit_rate(const DiagnosticsSeries& series, RateKind kind,
                 std::pair<double, double> window);

/// λ = ν(δ)·α·ρ_min, the guaranteed exponential decay rate.
double theoretical_rate_bound(const KernelSpec& spec, const KernelMoments& moments,
                              double alpha, double rho_min);

/// True when the error series flatlines: max/min over the last 30% of the
/// horizon below 2 (samples at the 1e-12 roundoff floor are ignored).
bool stagnated(const DiagnosticsSeries& series);

}  // namespace ringlwr
