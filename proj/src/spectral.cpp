#include "ringlwr/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringlwr/numerics.hpp"

namespace ringlwr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Simpson interval count resolving the oscillation of sin/cos(2πks) on [0,δ]:
// at least 192 intervals per period keeps the relative error below 1e-8.
std::size_t oscillation_intervals(int k, double delta) {
  const double periods = std::max(1.0, static_cast<double>(k) * delta);
  const auto n = static_cast<std::size_t>(std::ceil(periods * 192.0));
  return std::max<std::size_t>(n, 1024);
}

}  // namespace

std::pair<double, double> fourier_coefficients(const KernelSpec& spec,
                                               const KernelMoments& moments, int k) {
  if (k < 1) throw std::invalid_argument("fourier_coefficients: k must be positive");
  const double delta = spec.delta();
  const double omega = kTwoPi * static_cast<double>(k);
  const std::size_t n = oscillation_intervals(k, delta);
  const double ib = simpson(
      [&](double s) { return std::sin(omega * s) * spec.eval(s); }, 0.0, delta, n);
  const double ic = simpson(
      [&](double s) { return (std::cos(omega * s) - 1.0) * spec.eval(s); }, 0.0, delta, n);
  return {ib / moments.nu, ic / moments.nu};
}

SpectralReport stability_constant(const KernelSpec& spec, int k_max) {
  if (k_max < 8) throw std::invalid_argument("stability_constant: k_max must be at least 8");
  const KernelMoments moments = compute_moments(spec, 1 << 16);

  SpectralReport report;
  report.k_max = k_max;
  report.b.reserve(static_cast<std::size_t>(k_max));
  report.c.reserve(static_cast<std::size_t>(k_max));
  report.eigenvalues.reserve(static_cast<std::size_t>(k_max));
  report.alpha = 0.0;
  report.alpha_argmin = 0;

  for (int k = 1; k <= k_max; ++k) {
    const auto [b, c] = fourier_coefficients(spec, moments, k);
    report.b.push_back(b);
    report.c.push_back(c);
    const double scale = kTwoPi * static_cast<double>(k);
    report.eigenvalues.emplace_back(-scale * b, scale * c);
    const double damping = scale * b;
    if (k == 1 || damping < report.alpha) {
      report.alpha = damping;
      report.alpha_argmin = k;
    }
  }

  report.tail_bound = (moments.w0 - moments.wdelta) / moments.nu;
  report.tail_below_min = report.tail_bound < report.alpha;

  if (spec.admissible() && report.alpha <= 0.0) {
    throw std::logic_error(
        "stability_constant: non-increasing, non-constant kernel produced alpha <= 0; "
        "this contradicts the spectral lower bound");
  }
  return report;
}

std::vector<std::complex<double>> evolve_linearized(
    const KernelSpec& spec, double rho_bar,
    const std::vector<std::complex<double>>& initial_modes, double t) {
  if (!(rho_bar > 0.0) || !(rho_bar < 1.0)) {
    throw std::invalid_argument("evolve_linearized: rho_bar must lie in (0,1)");
  }
  if (t < 0.0) throw std::invalid_argument("evolve_linearized: t must be nonnegative");
  if (initial_modes.empty()) return {};
  if (std::abs(initial_modes[0]) != 0.0) {
    throw std::invalid_argument("evolve_linearized: mean mode (k=0) must be zero");
  }

  const KernelMoments moments = compute_moments(spec, 1 << 16);
  std::vector<std::complex<double>> evolved(initial_modes.size());
  evolved[0] = {0.0, 0.0};
  const double advection = 1.0 - 2.0 * rho_bar;
  for (std::size_t k = 1; k < initial_modes.size(); ++k) {
    const auto [b, c] = fourier_coefficients(spec, moments, static_cast<int>(k));
    const double scale = kTwoPi * static_cast<double>(k);
    const std::complex<double> exponent(
        moments.nu * rho_bar * (-scale * b),
        -scale * advection + moments.nu * rho_bar * scale * c);
    evolved[k] = initial_modes[k] * std::exp(t * exponent);
  }
  return evolved;
}

}  // namespace ringlwr
