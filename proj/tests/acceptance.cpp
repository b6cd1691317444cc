// Acceptance suite: end-to-end checks with pinned tolerances, one line per
// criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "ringlwr/diagnostics.hpp"
#include "ringlwr/nonlocal_ops.hpp"
#include "ringlwr/numerics.hpp"
#include "ringlwr/oracles.hpp"
#include "ringlwr/solver.hpp"
#include "ringlwr/spectral.hpp"
#include "ringlwr/verify_suites.hpp"

using namespace ringlwr;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ConservationRecord {
  std::string label;
  double mass_drift;
  double min_undershoot;  // max(initial_min - observed_min, 0)
  double max_overshoot;   // max(observed_max - initial_max, 0)
};

std::vector<ConservationRecord> g_conservation;

void track_conservation(const std::string& label, const DensityField& rho0,
                        const SimulationRun& sim) {
  ConservationRecord rec{label, 0.0, 0.0, 0.0};
  const double mass0 = sim.diagnostics.mass.front();
  for (std::size_t i = 0; i < sim.diagnostics.size(); ++i) {
    rec.mass_drift = std::max(rec.mass_drift, std::abs(sim.diagnostics.mass[i] - mass0));
    rec.min_undershoot = std::max(rec.min_undershoot,
                                  rho0.min_value() - sim.diagnostics.min_rho[i]);
    rec.max_overshoot = std::max(rec.max_overshoot,
                                 sim.diagnostics.max_rho[i] - rho0.max_value());
  }
  g_conservation.push_back(rec);
}

struct Criterion {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

double series_value_at(const DiagnosticsSeries& d, double t) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (std::abs(d.times[i] - t) < 1e-9) return d.l2_error[i];
  }
  return std::numeric_limits<double>::quiet_NaN();
}

char buffer[512];

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Criterion criterion_local_decay() {
  const auto start = std::chrono::steady_clock::now();
  SolverConfig cfg{ModelKind::LocalLWR, std::nullopt, DesiredSpeed{}, PeriodicGrid(5000),
                   0.5,                 8.0,          {},             0.01};
  const DensityField rho0 =
      DensityField::sample(cfg.grid, [](double x) { return 0.5 * x; });
  const SimulationRun sim = run(cfg, rho0);
  track_conservation("local-ramp", rho0, sim);

  const double at4 = series_value_at(sim.diagnostics, 4.0);
  const double at8 = series_value_at(sim.diagnostics, 8.0);
  const double law4 = 1.0 / (2.0 * std::sqrt(12.0) * 4.0);
  const double law8 = 1.0 / (2.0 * std::sqrt(12.0) * 8.0);
  const double rel4 = std::abs(at4 - law4) / law4;
  const double rel8 = std::abs(at8 - law8) / law8;
  // Supporting check: log-log slope of the decay is -1 within 0.05.
  const RateFit fit = fit_rate(sim.diagnostics, RateKind::Linear, {2.0, 8.0});
  const double elapsed = seconds_since(start);
  std::snprintf(buffer, sizeof(buffer),
                "L2(4)=%.6g vs %.6g (%.2f%%), L2(8)=%.6g vs %.6g (%.2f%%), slope=%.4f, %.1fs",
                at4, law4, 100.0 * rel4, at8, law8, 100.0 * rel8, -fit.rate, elapsed);
  const bool pass = rel4 <= 0.05 && rel8 <= 0.05 && std::abs(fit.rate - 1.0) <= 0.05 &&
                    elapsed <= 120.0;
  return {1, "local ramp follows 1/(2*sqrt(12)t)", pass, buffer};
}

Criterion criterion_exponential_stabilization() {
  const auto start = std::chrono::steady_clock::now();
  const KernelSpec spec = KernelSpec::linear_decreasing(0.2);
  SolverConfig cfg{ModelKind::NonlocalLWR, spec, DesiredSpeed{}, PeriodicGrid(1000),
                   0.5,                    8.0,  {},             0.01};
  const DensityField rho0 = DensityField::sample(cfg.grid, [](double x) {
    return 0.4 + 0.6 * std::exp(-100.0 * (x - 0.5) * (x - 0.5));
  });
  const SimulationRun sim = run(cfg, rho0);
  track_conservation("bell-linear", rho0, sim);
  const DiagnosticsSeries& d = sim.diagnostics;

  bool monotone = true;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d.times[i - 1] < 0.1) continue;
    const auto steps = static_cast<double>(d.step_index[i] - d.step_index[i - 1]);
    if (d.energy[i] > d.energy[i - 1] + 1e-10 * steps) monotone = false;
  }

  const RateFit fit = fit_rate(d, RateKind::Exponential, {1.6, 8.0});
  const KernelMoments moments = compute_moments(spec, 1 << 16);
  const double alpha = stability_constant(spec, 256).alpha;
  const double bound = theoretical_rate_bound(spec, moments, alpha, rho0.min_value());
  const double elapsed = seconds_since(start);

  std::snprintf(buffer, sizeof(buffer),
                "E monotone=%d, lambda=%.4f (bound %.4f, -10%% => %.4f), r2=%.5f, %.1fs",
                monotone ? 1 : 0, fit.rate, bound, 0.9 * bound, fit.r_squared, elapsed);
  const bool pass = monotone && fit.rate > 0.0 && fit.r_squared > 0.99 &&
                    fit.rate >= 0.9 * bound && elapsed <= 60.0;
  return {2, "admissible kernel stabilizes exponentially", pass, buffer};
}

Criterion criterion_counterexample() {
  const double t_end = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  double finest_error = 0.0;
  bool flagged = false;

  for (int n : {1250, 2500, 5000}) {
    SolverConfig cfg{ModelKind::NonlocalLWR,
                     KernelSpec::constant(0.5),
                     DesiredSpeed{},
                     PeriodicGrid(n),
                     0.5,
                     t_end,
                     {t_end},
                     0.01};
    const DensityField rho0 = DensityField::sample(cfg.grid, [](double x) {
      return 0.5 + 0.4 * std::sin(2.0 * kTwoPi * x);
    });
    const SimulationRun sim = run(cfg, rho0);
    track_conservation("sine-constant-" + std::to_string(n), rho0, sim);

    const DensityField& final_state = sim.snapshots.back().second;
    const DensityField exact = traveling_wave_exact(rho0, 0.5, t_end);
    CompensatedSum l1;
    for (int j = 0; j < n; ++j) {
      l1.add(std::abs(final_state.values[static_cast<std::size_t>(j)] -
                      exact.values[static_cast<std::size_t>(j)]));
    }
    const double err = l1.value() * cfg.grid.dx();
    if (err >= previous) decreasing = false;
    previous = err;
    finest_error = err;
    if (n == 5000) flagged = stagnated(sim.diagnostics);
  }

  std::snprintf(buffer, sizeof(buffer),
                "L1 at dx=2e-4: %.4f (<= 0.05), refinement monotone=%d, stagnated=%d",
                finest_error, decreasing ? 1 : 0, flagged ? 1 : 0);
  return {3, "constant kernel keeps the traveling wave",
          finest_error <= 0.05 && decreasing && flagged, buffer};
}

Criterion criterion_spectral_zero_mode() {
  const SpectralReport constant = stability_constant(KernelSpec::constant(0.5), 16);
  const double resonant = 2.0 * kTwoPi * constant.b[1];  // 2π·2·b(2)
  const SpectralReport linear = stability_constant(KernelSpec::linear_decreasing(0.2), 256);
  std::snprintf(buffer, sizeof(buffer),
                "2pi*2*b(2)=%.3e (<=1e-10), alpha_const=%.3e (<=1e-10), alpha_lin=%.4f (>0)",
                resonant, constant.alpha, linear.alpha);
  const bool pass = std::abs(resonant) <= 1e-10 && std::abs(constant.alpha) <= 1e-10 &&
                    linear.alpha > 0.0;
  return {4, "resonant mode undamped, admissible spectrum positive", pass, buffer};
}

Criterion criterion_inequality_suites() {
  const auto start = std::chrono::steady_clock::now();
  const unsigned seed = 20240901;
  const KernelSpec spec = KernelSpec::linear_decreasing(0.2);
  const auto poincare = verify::nonlocal_poincare_suite(spec, seed, 100);
  const auto nonlinear = verify::nonlinear_poincare_suite(spec, seed + 1, 100);
  const auto rearrange = verify::hardy_littlewood_suite(seed + 2, 100, 8);
  const double elapsed = seconds_since(start);
  std::snprintf(buffer, sizeof(buffer),
                "poincare %d/%d, nonlinear %d/%d, rearrangement %d/%d, %.1fs",
                poincare.cases - poincare.failures, poincare.cases,
                nonlinear.cases - nonlinear.failures, nonlinear.cases,
                rearrange.cases - rearrange.failures, rearrange.cases, elapsed);
  const bool pass = poincare.passed() && nonlinear.passed() && rearrange.passed() &&
                    elapsed <= 30.0;
  return {5, "inequality suites hold with zero failures", pass, buffer};
}

Criterion criterion_tent_identity() {
  const auto suite = verify::local_identity_suite(20240905, 20);
  std::snprintf(buffer, sizeof(buffer),
                "%d/%d identities within 1e-6 relative (worst lhs=%.9g rhs=%.9g)",
                suite.cases - suite.failures, suite.cases, suite.worst_lhs,
                suite.worst_rhs);
  return {6, "full-ring tent kernel acts as 6x the local pairing", suite.passed(), buffer};
}

Criterion criterion_conservation() {
  double worst_drift = 0.0;
  double worst_bound = 0.0;
  for (const ConservationRecord& rec : g_conservation) {
    worst_drift = std::max(worst_drift, rec.mass_drift);
    worst_bound = std::max({worst_bound, rec.min_undershoot, rec.max_overshoot});
  }
  std::snprintf(buffer, sizeof(buffer),
                "%zu runs: worst mass drift %.3e (<=1e-12), worst bound escape %.3e (<=1e-10)",
                g_conservation.size(), worst_drift, worst_bound);
  return {7, "mass conserved, min/max principle held in every run",
          worst_drift <= 1e-12 && worst_bound <= 1e-10, buffer};
}

Criterion criterion_linearized_consistency() {
  const KernelSpec spec = KernelSpec::linear_decreasing(0.2);
  SolverConfig cfg{ModelKind::NonlocalLWR, spec, DesiredSpeed{}, PeriodicGrid(1000),
                   0.5,                    2.0,  {},             0.01};
  for (int i = 0; i <= 20; ++i) cfg.snapshot_times.push_back(0.1 * i);
  const DensityField rho0 = DensityField::sample(cfg.grid, [](double x) {
    return 0.5 + 0.001 * std::sin(kTwoPi * x);
  });
  const SimulationRun sim = run(cfg, rho0);
  track_conservation("perturbation", rho0, sim);

  std::vector<double> ts, amps;
  for (const auto& [t, field] : sim.snapshots) {
    ts.push_back(t);
    amps.push_back(std::log(std::abs(fourier_mode(field, 1))));
  }
  const LinearRegression reg = linear_fit(ts, amps);
  const double observed = -reg.slope;

  std::vector<std::complex<double>> modes(2, {0.0, 0.0});
  modes[1] = {1.0, 0.0};
  const auto evolved = evolve_linearized(spec, rho0.mean(), modes, 1.0);
  const double exact = -std::log(std::abs(evolved[1]));

  const double rel = std::abs(observed - exact) / exact;
  std::snprintf(buffer, sizeof(buffer),
                "mode-1 rate %.5f vs linearized %.5f (%.2f%%, <=10%%)", observed, exact,
                100.0 * rel);
  return {8, "nonlinear mode-1 decay matches the linearization", rel <= 0.10, buffer};
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  const auto clock = []() { return std::chrono::steady_clock::now(); };
  const auto t0 = clock();

  results.push_back(criterion_local_decay());
  results.push_back(criterion_exponential_stabilization());
  results.push_back(criterion_counterexample());
  results.push_back(criterion_spectral_zero_mode());
  results.push_back(criterion_inequality_suites());
  results.push_back(criterion_tent_identity());
  results.push_back(criterion_linearized_consistency());
  // Conservation aggregates every run above, so it reports last.
  results.push_back(criterion_conservation());
  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });

  int failed = 0;
  for (const Criterion& c : results) {
    if (!c.pass) ++failed;
    std::printf("[%s] %d. %s — %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                c.detail.c_str());
  }
  const double elapsed =
      std::chrono::duration<double>(clock() - t0).count();
  std::printf("acceptance: %d/%zu passed in %.1f s\n", static_cast<int>(results.size()) - failed,
              results.size(), elapsed);
  return failed == 0 ? 0 : 1;
}
