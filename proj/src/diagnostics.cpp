#include "ringlwr/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ringlwr/nonlocal_ops.hpp"
#include "ringlwr/numerics.hpp"

namespace ringlwr {

double energy(const DensityField& rho) {
  const double d = l2_distance_to_mean(rho);
  return 0.5 * d * d;
}

double kl_divergence(const DensityField& rho) {
  if (!(rho.min_value() > 0.0)) {
    throw std::domain_error("kl_divergence: density must be strictly positive");
  }
  const double mean = rho.mean();
  CompensatedSum acc;
  for (double v : rho.values) acc.add(v * std::log(v / mean));
  double value = acc.value() * rho.grid.dx();
  if (value < 0.0 && value > -1e-12) value = 0.0;  // Gibbs bound up to roundoff
  return value;
}

void record(DiagnosticsSeries& series, double t, const DensityField& rho,
            std::int64_t step) {
  series.times.push_back(t);
  series.energy.push_back(energy(rho));
  series.l2_error.push_back(l2_distance_to_mean(rho));
  series.kl.push_back(rho.min_value() > 0.0
                          ? kl_divergence(rho)
                          : std::numeric_limits<double>::quiet_NaN());
  series.mass.push_back(rho.mean());
  series.min_rho.push_back(rho.min_value());
  series.max_rho.push_back(rho.max_value());
  series.step_index.push_back(step);
}

RateFit fit_rate(const DiagnosticsSeries& series, RateKind kind,
                 std::pair<double, double> window) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double t = series.times[i];
    const double err = series.l2_error[i];
    if (t < window.first || t > window.second) continue;
    if (!(err > 1e-13)) continue;
    if (kind == RateKind::Linear && !(t > 0.0)) continue;
    xs.push_back(kind == RateKind::Exponential ? t : std::log(t));
    ys.push_back(std::log(err));
  }
  if (xs.size() < 10) {
    throw std::runtime_error("fit_rate: fewer than 10 usable samples in the fit window");
  }
  const LinearRegression reg = linear_fit(xs, ys);
  return RateFit{kind, -reg.slope, reg.r_squared, window};
}

double theoretical_rate_bound(const KernelSpec& /*spec*/, const KernelMoments& moments,
                              double alpha, double rho_min) {
  if (alpha < 0.0) throw std::invalid_argument("theoretical_rate_bound: alpha must be >= 0");
  if (rho_min < 0.0) throw std::invalid_argument("theoretical_rate_bound: rho_min must be >= 0");
  return moments.nu * alpha * rho_min;
}

bool stagnated(const DiagnosticsSeries& series) {
  if (series.size() < 2) return false;
  const double horizon = series.times.back();
  const double cutoff = 0.7 * horizon;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series.times[i] < cutoff) continue;
    const double err = series.l2_error[i];
    if (!(err > 1e-12)) continue;
    lo = std::min(lo, err);
    hi = std::max(hi, err);
    ++count;
  }
  if (count < 2) return false;
  return hi / lo < 2.0;
}

}  // namespace ringlwr
