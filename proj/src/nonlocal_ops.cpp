#include "ringlwr/nonlocal_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringlwr/numerics.hpp"

namespace ringlwr {

NonlocalEvaluator::NonlocalEvaluator(const KernelSpec& spec, const PeriodicGrid& grid) {
  const double dx = grid.dx();
  const double delta = spec.delta();
  if (delta < dx) {
    throw std::invalid_argument("NonlocalEvaluator: kernel horizon is unresolved (delta < dx)");
  }
  support_ = static_cast<int>(std::floor(delta / dx + 1e-9));
  support_ = std::min(support_, grid.n_cells);
  weights_.resize(static_cast<std::size_t>(support_) + 1);
  CompensatedSum total;
  for (int m = 0; m <= support_; ++m) {
    const double s = std::min(static_cast<double>(m) * dx, delta);
    const double endpoint = (m == 0 || m == support_) ? 0.5 : 1.0;
    weights_[static_cast<std::size_t>(m)] = endpoint * spec.eval(s) * dx;
    total.add(weights_[static_cast<std::size_t>(m)]);
  }
  const double norm = total.value();
  if (!(norm > 0.0)) {
    throw std::runtime_error("NonlocalEvaluator: discrete kernel weights have zero mass");
  }
  for (double& w : weights_) w /= norm;
  fast_constant_ = spec.shape() == KernelShape::Constant;
}

void NonlocalEvaluator::apply_direct(const std::vector<double>& in,
                                     std::vector<double>& out) const {
  const int n = static_cast<int>(in.size());
  out.resize(in.size());
  const int m_count = support_ + 1;
  // Unwrap the ring once so each window is a contiguous dot product; four
  // independent accumulators let the compiler vectorize without reassociating
  // any single lane.
  extended_.resize(static_cast<std::size_t>(n + support_));
  std::copy(in.begin(), in.end(), extended_.begin());
  std::copy(in.begin(), in.begin() + support_, extended_.begin() + n);
  const double* w = weights_.data();
  for (int j = 0; j < n; ++j) {
    const double* p = extended_.data() + j;
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    int m = 0;
    for (; m + 4 <= m_count; m += 4) {
      s0 += w[m] * p[m];
      s1 += w[m + 1] * p[m + 1];
      s2 += w[m + 2] * p[m + 2];
      s3 += w[m + 3] * p[m + 3];
    }
    double s = (s0 + s1) + (s2 + s3);
    for (; m < m_count; ++m) s += w[m] * p[m];
    out[static_cast<std::size_t>(j)] = s;
  }
}

void NonlocalEvaluator::apply(const std::vector<double>& in, std::vector<double>& out) const {
  if (!fast_constant_) {
    apply_direct(in, out);
    return;
  }
  // Constant kernel: equal interior weights, so the window sum reduces to a
  // prefix-sum difference. Accumulate in long double to keep the fast path
  // within 1e-12 of the direct sum at large N.
  const int n = static_cast<int>(in.size());
  const int m = support_;
  out.resize(in.size());
  prefix_.resize(static_cast<std::size_t>(n + m) + 1);
  prefix_[0] = 0.0L;
  for (int i = 0; i < n + m; ++i) {
    prefix_[static_cast<std::size_t>(i) + 1] =
        prefix_[static_cast<std::size_t>(i)] + static_cast<long double>(in[static_cast<std::size_t>(i % n)]);
  }
  const double w_end = weights_.front();  // == weights_.back()
  const double w_mid = (m >= 2) ? weights_[1] : 0.0;
  for (int j = 0; j < n; ++j) {
    const long double interior =
        prefix_[static_cast<std::size_t>(j + m)] - prefix_[static_cast<std::size_t>(j) + 1];
    const double ends = w_end * (in[static_cast<std::size_t>(j)] +
                                 in[static_cast<std::size_t>((j + m) % n)]);
    out[static_cast<std::size_t>(j)] = ends + w_mid * static_cast<double>(interior);
  }
}

DensityField nonlocal_average(const DensityField& rho, const KernelSpec& spec) {
  NonlocalEvaluator eval(spec, rho.grid);
  std::vector<double> out;
  eval.apply(rho.values, out);
  return DensityField(rho.grid, std::move(out));
}

DensityField nonlocal_gradient(const DensityField& rho, const KernelSpec& spec,
                               const KernelMoments& moments) {
  NonlocalEvaluator eval(spec, rho.grid);
  std::vector<double> out;
  eval.apply(rho.values, out);
  // Discrete kernel mass is exactly 1 after renormalization, so the identity
  // D = (W - rho*mass)/nu reduces to (W - rho)/nu with the same weights as W.
  for (int j = 0; j < rho.size(); ++j) {
    auto idx = static_cast<std::size_t>(j);
    out[idx] = (out[idx] - rho.values[idx]) / moments.nu;
  }
  return DensityField(rho.grid, std::move(out));
}

double l2_distance_to_mean(const DensityField& rho) {
  const double mean = rho.mean();
  CompensatedSum acc;
  for (double v : rho.values) {
    const double d = v - mean;
    acc.add(d * d);
  }
  return std::sqrt(std::max(acc.value(), 0.0) * rho.grid.dx());
}

std::complex<double> fourier_mode(const DensityField& rho, int k) {
  const int n = rho.size();
  const double w = -2.0 * std::numbers::pi * static_cast<double>(k);
  CompensatedSum re, im;
  for (int j = 0; j < n; ++j) {
    const double phase = w * rho.grid.center(j);
    const double v = rho.values[static_cast<std::size_t>(j)];
    re.add(v * std::cos(phase));
    im.add(v * std::sin(phase));
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  return {re.value() * inv_n, im.value() * inv_n};
}

}  // namespace ringlwr
