#include "ringlwr/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ringlwr/numerics.hpp"

namespace ringlwr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frac(double x) { return x - std::floor(x); }

/// (b(k), c(k)) through composite Gauss-Legendre panels; this route is kept
/// independent of the spectral module's Simpson quadrature.
std::complex<double> mode_symbol(const KernelSpec& spec, double nu, int k) {
  const double delta = spec.delta();
  const double omega = kTwoPi * static_cast<double>(k);
  const auto panels = std::max<std::size_t>(
      64, 16 * static_cast<std::size_t>(std::ceil(std::abs(k) * delta)));
  const double b = gauss8(
      [&](double s) { return std::sin(omega * s) * spec.eval(s); }, 0.0, delta, panels);
  const double c = gauss8(
      [&](double s) { return (std::cos(omega * s) - 1.0) * spec.eval(s); }, 0.0, delta,
      panels);
  return {c / nu, b / nu};  // symbol i*b + c stored as (re, im) = (c, b)
}

double oracle_nu(const KernelSpec& spec) {
  return gauss8([&](double s) { return s * spec.eval(s); }, 0.0, spec.delta(), 256);
}

struct ModeData {
  int k;
  std::complex<double> rho_hat;   // ρ̂(k)
  std::complex<double> symbol;    // i b(k) + c(k)
};

/// Extracts the active modes of the field (full direct DFT) and attaches the
/// oracle-quadrature symbol of the look-ahead gradient to each.
std::vector<ModeData> active_modes(const DensityField& rho, const KernelSpec& spec,
                                   double nu) {
  const int n = rho.size();
  const int k_max = (n - 1) / 2;  // skip the Nyquist pair
  double scale = 0.0;
  for (double v : rho.values) scale = std::max(scale, std::abs(v));
  const double tol = 1e-13 * (1.0 + scale);

  std::vector<ModeData> modes;
  for (int k = 1; k <= k_max; ++k) {
    CompensatedSum re, im;
    for (int j = 0; j < n; ++j) {
      const double phase = -kTwoPi * static_cast<double>(k) * rho.grid.center(j);
      const double v = rho.values[static_cast<std::size_t>(j)];
      re.add(v * std::cos(phase));
      im.add(v * std::sin(phase));
    }
    const std::complex<double> rho_hat(re.value() / n, im.value() / n);
    if (std::abs(rho_hat) <= tol) continue;
    modes.push_back(ModeData{k, rho_hat, mode_symbol(spec, nu, k)});
  }
  return modes;
}

/// Pointwise ∂ₓρ and Dρ of the trigonometric interpolant on the grid.
void reconstruct_derivatives(const DensityField& rho, const std::vector<ModeData>& modes,
                             std::vector<double>& d_rho, std::vector<double>& nl_grad) {
  const int n = rho.size();
  d_rho.assign(static_cast<std::size_t>(n), 0.0);
  nl_grad.assign(static_cast<std::size_t>(n), 0.0);
  for (const ModeData& m : modes) {
    const double w = kTwoPi * static_cast<double>(m.k);
    for (int j = 0; j < n; ++j) {
      const double phase = w * rho.grid.center(j);
      const std::complex<double> e(std::cos(phase), std::sin(phase));
      const auto i = static_cast<std::size_t>(j);
      // Real signal: modes ±k contribute 2·Re(...).
      d_rho[i] += 2.0 * std::real(std::complex<double>(0.0, w) * m.rho_hat * e);
      nl_grad[i] += 2.0 * std::real(m.symbol * m.rho_hat * e);
    }
  }
}

}  // namespace

LocalLinearSolution::LocalLinearSolution(double beta_in) : beta(beta_in) {
  if (beta < 0.0 || beta > 1.0) {
    throw std::invalid_argument("LocalLinearSolution: beta must lie in [0, 1]");
  }
}

double LocalLinearSolution::shock_time() const {
  if (beta == 0.0) return std::numeric_limits<double>::infinity();
  return 0.5 / beta;
}

double LocalLinearSolution::shock_position(double t) const {
  return frac((1.0 - beta) * t - 0.5);
}

double LocalLinearSolution::eval(double x, double t) const {
  if (t < 0.0) throw std::invalid_argument("LocalLinearSolution: t must be nonnegative");
  if (beta == 0.0) return 0.0;
  if (t == 0.0) return beta * frac(x);
  if (t <= shock_time()) {
    // Fan of width 2βt anchored at the wrap point, linear ramp elsewhere.
    const double u = frac(x - (1.0 - 2.0 * beta) * t);
    if (u < 2.0 * beta * t) return beta - u / (2.0 * t);
    return beta * (u - 2.0 * beta * t) / (1.0 - 2.0 * beta * t);
  }
  // Post-shock: the whole profile is one fan branch selected so that the
  // value lies between the jump endpoints β/2 ∓ 1/(4t).
  return 0.5 * beta + (0.5 - frac(x - (1.0 - beta) * t + 0.5)) / (2.0 * t);
}

double local_linear_exact(double beta, double x, double t) {
  return LocalLinearSolution(beta).eval(x, t);
}

DensityField traveling_wave_exact(const DensityField& rho0, double delta, double t) {
  if (t < 0.0) throw std::invalid_argument("traveling_wave_exact: t must be nonnegative");
  const int n = rho0.size();
  const double m_real = 1.0 / delta;
  if (std::abs(m_real - std::round(m_real)) > 1e-9) {
    throw std::invalid_argument("traveling_wave_exact: delta must equal 1/m");
  }
  const double cells_real = static_cast<double>(n) * delta;
  if (std::abs(cells_real - std::round(cells_real)) > 1e-9) {
    throw std::invalid_argument("traveling_wave_exact: delta must be grid-aligned");
  }
  const int period = static_cast<int>(std::round(cells_real));
  for (int j = 0; j < n; ++j) {
    const double a = rho0.values[static_cast<std::size_t>(j)];
    const double b = rho0.values[static_cast<std::size_t>((j + period) % n)];
    if (std::abs(a - b) > 1e-10) {
      throw std::invalid_argument("traveling_wave_exact: initial data is not delta-periodic");
    }
  }

  const double speed = 1.0 - rho0.mean();
  const double shift_cells = speed * t * static_cast<double>(n);
  const double rounded = std::round(shift_cells);
  std::vector<double> out(static_cast<std::size_t>(n));
  if (std::abs(shift_cells - rounded) <= 1e-9 * std::max(1.0, std::abs(shift_cells))) {
    // Profile moves right: the value at x_j comes from rho0 at x_j - speed*t.
    const int s = ((static_cast<long long>(rounded) % n) + n) % n;
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(j)] =
          rho0.values[static_cast<std::size_t>((j - s + n) % n)];
    }
    return DensityField(rho0.grid, std::move(out));
  }

  // Fractional shift: evaluate the trigonometric interpolant at x - speed*t.
  const double shift = speed * t;
  const int k_max = (n - 1) / 2;
  std::vector<std::complex<double>> coeff(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    CompensatedSum re, im;
    for (int j = 0; j < n; ++j) {
      const double phase = -kTwoPi * k * rho0.grid.center(j);
      const double v = rho0.values[static_cast<std::size_t>(j)];
      re.add(v * std::cos(phase));
      im.add(v * std::sin(phase));
    }
    coeff[static_cast<std::size_t>(k)] = {re.value() / n, im.value() / n};
  }
  for (int j = 0; j < n; ++j) {
    const double x = rho0.grid.center(j) - shift;
    CompensatedSum acc;
    acc.add(coeff[0].real());
    for (int k = 1; k <= k_max; ++k) {
      const double phase = kTwoPi * k * x;
      const std::complex<double> e(std::cos(phase), std::sin(phase));
      acc.add(2.0 * std::real(coeff[static_cast<std::size_t>(k)] * e));
    }
    out[static_cast<std::size_t>(j)] = acc.value();
  }
  return DensityField(rho0.grid, std::move(out));
}

InequalityCheck check_nonlocal_poincare(const DensityField& rho, const KernelSpec& spec,
                                        double alpha) {
  const double nu = oracle_nu(spec);
  const auto modes = active_modes(rho, spec, nu);
  std::vector<double> d_rho, nl_grad;
  reconstruct_derivatives(rho, modes, d_rho, nl_grad);

  const double dx = rho.grid.dx();
  CompensatedSum lhs_acc;
  for (std::size_t j = 0; j < d_rho.size(); ++j) lhs_acc.add(d_rho[j] * nl_grad[j]);
  const double lhs = lhs_acc.value() * dx;

  const double mean = rho.mean();
  CompensatedSum var_acc;
  for (double v : rho.values) var_acc.add((v - mean) * (v - mean));
  const double rhs = alpha * var_acc.value() * dx;

  return InequalityCheck{lhs, rhs, lhs >= rhs - 1e-8};
}

InequalityCheck check_nonlinear_poincare(const DensityField& rho, const KernelSpec& spec) {
  const double rho_min = rho.min_value();
  if (rho_min < 0.0) {
    throw std::domain_error("check_nonlinear_poincare: density must be nonnegative");
  }
  const double nu = oracle_nu(spec);
  const auto modes = active_modes(rho, spec, nu);
  std::vector<double> d_rho, nl_grad;
  reconstruct_derivatives(rho, modes, d_rho, nl_grad);

  const double dx = rho.grid.dx();
  CompensatedSum lhs_acc, base_acc;
  for (std::size_t j = 0; j < d_rho.size(); ++j) {
    const double pairing = d_rho[j] * nl_grad[j];
    lhs_acc.add(rho.values[j] * pairing);
    base_acc.add(pairing);
  }
  const double lhs = lhs_acc.value() * dx;
  const double rhs = rho_min * base_acc.value() * dx;
  return InequalityCheck{lhs, rhs, lhs >= rhs - 1e-8};
}

bool check_hardy_littlewood(const std::vector<double>& rho_samples,
                            const std::function<double(double)>& f_monotone, int shift) {
  const int n = static_cast<int>(rho_samples.size());
  if (n == 0) throw std::invalid_argument("check_hardy_littlewood: empty sequence");
  if (shift < 0 || shift >= n) {
    throw std::invalid_argument("check_hardy_littlewood: shift must lie in [0, N)");
  }
  CompensatedSum shifted, aligned;
  for (int i = 0; i < n; ++i) {
    const double fi = f_monotone(rho_samples[static_cast<std::size_t>(i)]);
    shifted.add(fi * rho_samples[static_cast<std::size_t>((i + shift) % n)]);
    aligned.add(fi * rho_samples[static_cast<std::size_t>(i)]);
  }
  return shifted.value() <= aligned.value() + 1e-12;
}

double mode_damping_oracle(const KernelSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("mode_damping_oracle: k must be positive");
  const double nu = oracle_nu(spec);
  const std::complex<double> symbol = mode_symbol(spec, nu, k);
  return kTwoPi * static_cast<double>(k) * symbol.imag();  // 2πk·b(k)
}

double TrigPoly::eval(double x) const {
  double v = offset;
  for (std::size_t k = 0; k < cos_coeff.size(); ++k) {
    const double w = kTwoPi * static_cast<double>(k + 1) * x;
    v += cos_coeff[k] * std::cos(w) + sin_coeff[k] * std::sin(w);
  }
  return v;
}

DensityField TrigPoly::to_field(const PeriodicGrid& grid) const {
  return DensityField::sample(grid, [this](double x) { return eval(x); });
}

TrigPoly random_positive_trig_poly(std::mt19937& rng) {
  std::uniform_real_distribution<double> coeff(-0.1, 0.1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    TrigPoly poly;
    poly.offset = 0.5;
    poly.cos_coeff.resize(8);
    poly.sin_coeff.resize(8);
    for (int k = 0; k < 8; ++k) {
      poly.cos_coeff[static_cast<std::size_t>(k)] = coeff(rng);
      poly.sin_coeff[static_cast<std::size_t>(k)] = coeff(rng);
    }
    double lo = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 2048; ++j) {
      lo = std::min(lo, poly.eval(static_cast<double>(j) / 2048.0));
    }
    if (lo > 0.01) return poly;
  }
  throw std::runtime_error("random_positive_trig_poly: rejection sampling failed");
}

}  // namespace ringlwr
