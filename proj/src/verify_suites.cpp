#include "ringlwr/verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ringlwr/oracles.hpp"
#include "ringlwr/spectral.hpp"

namespace ringlwr::verify {

namespace {

constexpr int kGridCells = 1024;

void fold_case(SuiteResult& suite, double lhs, double rhs, bool holds) {
  const double margin = lhs - rhs;
  if (suite.cases == 0 || margin < suite.worst_margin) {
    suite.worst_margin = margin;
    suite.worst_lhs = lhs;
    suite.worst_rhs = rhs;
  }
  ++suite.cases;
  if (!holds) ++suite.failures;
}

}  // namespace

SuiteResult nonlocal_poincare_suite(const KernelSpec& spec, unsigned seed, int count) {
  SuiteResult suite;
  suite.name = "nonlocal-poincare";
  std::mt19937 rng(seed);
  const PeriodicGrid grid(kGridCells);
  const SpectralReport report = stability_constant(spec, 256);
  for (int i = 0; i < count; ++i) {
    const TrigPoly poly = random_positive_trig_poly(rng);
    const InequalityCheck check =
        check_nonlocal_poincare(poly.to_field(grid), spec, report.alpha);
    fold_case(suite, check.lhs, check.rhs, check.holds);
  }
  return suite;
}

SuiteResult nonlinear_poincare_suite(const KernelSpec& spec, unsigned seed, int count) {
  SuiteResult suite;
  suite.name = "nonlinear-poincare";
  std::mt19937 rng(seed);
  const PeriodicGrid grid(kGridCells);
  for (int i = 0; i < count; ++i) {
    const TrigPoly poly = random_positive_trig_poly(rng);
    const InequalityCheck check = check_nonlinear_poincare(poly.to_field(grid), spec);
    fold_case(suite, check.lhs, check.rhs, check.holds);
  }
  return suite;
}

SuiteResult hardy_littlewood_suite(unsigned seed, int sequences, int length) {
  SuiteResult suite;
  suite.name = "hardy-littlewood";
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int i = 0; i < sequences; ++i) {
    std::vector<double> rho(static_cast<std::size_t>(length));
    for (double& v : rho) v = value(rng);
    const double lo = *std::min_element(rho.begin(), rho.end());
    const auto f = [lo](double r) { return 0.5 * (r - lo) * (r - lo); };
    for (int shift = 0; shift < length; ++shift) {
      double shifted = 0.0;
      double aligned = 0.0;
      for (int j = 0; j < length; ++j) {
        shifted += f(rho[static_cast<std::size_t>(j)]) *
                   rho[static_cast<std::size_t>((j + shift) % length)];
        aligned += f(rho[static_cast<std::size_t>(j)]) * rho[static_cast<std::size_t>(j)];
      }
      fold_case(suite, aligned + 1e-12, shifted, check_hardy_littlewood(rho, f, shift));
    }
  }
  return suite;
}

SuiteResult local_identity_suite(unsigned seed, int count) {
  SuiteResult suite;
  suite.name = "tent-kernel-identity";
  std::mt19937 rng(seed);
  const PeriodicGrid grid(kGridCells);
  const KernelSpec tent = KernelSpec::linear_decreasing(1.0);
  for (int i = 0; i < count; ++i) {
    const TrigPoly poly = random_positive_trig_poly(rng);
    const DensityField rho = poly.to_field(grid);
    // lhs from the inequality checker; rhs = 6 ∫ (ρ-ρ̄)² dx via alpha = 6.
    const InequalityCheck check = check_nonlocal_poincare(rho, tent, 6.0);
    const double rel =
        std::abs(check.lhs - check.rhs) / std::max(std::abs(check.rhs), 1e-300);
    fold_case(suite, check.lhs, check.rhs, rel <= 1e-6);
  }
  return suite;
}

std::vector<SuiteResult> run_all(unsigned seed, int count) {
  const KernelSpec kernel = KernelSpec::linear_decreasing(0.2);
  std::vector<SuiteResult> all;
  all.push_back(nonlocal_poincare_suite(kernel, seed, count));
  all.push_back(nonlinear_poincare_suite(kernel, seed + 1, count));
  all.push_back(hardy_littlewood_suite(seed + 2, count));
  all.push_back(local_identity_suite(seed + 3, std::max(1, count / 5)));
  return all;
}

}  // namespace ringlwr::verify
