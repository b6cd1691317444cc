#include "ringlwr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ringlwr/nonlocal_ops.hpp"

namespace ringlwr {

namespace {

constexpr double kSpeedFloor = 1e-6;
constexpr double kEventTol = 1e-12;

/// Per-run workspace: cached kernel weights plus flux/average buffers.
class Stepper {
 public:
  Stepper(const SolverConfig& cfg)
      : cfg_(cfg), n_(cfg.grid.n_cells), dx_(cfg.grid.dx()) {
    if (cfg.model == ModelKind::NonlocalLWR) {
      eval_.emplace(*cfg.kernel, cfg.grid);
      avg_.resize(static_cast<std::size_t>(n_));
    }
    flux_.resize(static_cast<std::size_t>(n_));
  }

  /// Fills the flux buffer for `rho` and returns the CFL wave-speed bound.
  double prepare(const std::vector<double>& rho) {
    const auto& u = cfg_.speed_law;
    double speed = 0.0;
    if (cfg_.model == ModelKind::NonlocalLWR) {
      eval_->apply(rho, avg_);
      for (int j = 0; j < n_; ++j) {
        const auto i = static_cast<std::size_t>(j);
        const double v = u(avg_[i]);
        flux_[i] = rho[i] * v;
        speed = std::max(speed, std::abs(v) + rho[i] * u.slope_bound());
      }
    } else {
      for (int j = 0; j < n_; ++j) {
        const auto i = static_cast<std::size_t>(j);
        flux_[i] = rho[i] * u(rho[i]);
        speed = std::max(speed, std::abs(1.0 - 2.0 * rho[i]));
      }
    }
    return std::max(speed, kSpeedFloor);
  }

  /// ρ_j ← ½(ρ_{j−1}+ρ_{j+1}) − dt/(2dx)·(F_{j+1}−F_{j−1}), periodic wrap.
  void advance(const std::vector<double>& in, std::vector<double>& out, double dt) const {
    const double r = dt / (2.0 * dx_);
    const double* v = in.data();
    const double* f = flux_.data();
    out.resize(in.size());
    double* o = out.data();
    const int last = n_ - 1;
    o[0] = 0.5 * (v[last] + v[1]) - r * (f[1] - f[last]);
    for (int j = 1; j < last; ++j) {
      o[j] = 0.5 * (v[j - 1] + v[j + 1]) - r * (f[j + 1] - f[j - 1]);
    }
    o[last] = 0.5 * (v[last - 1] + v[0]) - r * (f[0] - f[last - 1]);
  }

 private:
  const SolverConfig& cfg_;
  int n_;
  double dx_;
  std::optional<NonlocalEvaluator> eval_;
  std::vector<double> avg_;
  std::vector<double> flux_;
};

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

void SolverConfig::validate() const {
  if (model == ModelKind::NonlocalLWR && !kernel.has_value()) {
    throw std::invalid_argument("SolverConfig: nonlocal model requires a kernel");
  }
  if (!(cfl > 0.0) || cfl > 1.0) {
    throw std::invalid_argument("SolverConfig: cfl must lie in (0, 1]");
  }
  if (t_end < 0.0) throw std::invalid_argument("SolverConfig: t_end must be nonnegative");
  if (!(diagnostic_interval > 0.0)) {
    throw std::invalid_argument("SolverConfig: diagnostic_interval must be positive");
  }
  for (double t : snapshot_times) {
    if (t < 0.0 || t > t_end + kEventTol) {
      throw std::invalid_argument("SolverConfig: snapshot times must lie in [0, t_end]");
    }
  }
}

double max_wave_speed(const DensityField& rho, const SolverConfig& config) {
  Stepper stepper(config);
  return stepper.prepare(rho.values);
}

DensityField lax_friedrichs_step(const DensityField& rho, const SolverConfig& config,
                                 double dt) {
  config.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("lax_friedrichs_step: dt must be positive");
  Stepper stepper(config);
  const double speed = stepper.prepare(rho.values);
  const double dt_max = config.cfl * config.grid.dx() / speed;
  if (dt > dt_max * (1.0 + 1e-9)) {
    throw std::invalid_argument("lax_friedrichs_step: dt violates the CFL bound");
  }
  std::vector<double> out;
  stepper.advance(rho.values, out, dt);
  if (!all_finite(out)) {
    throw std::runtime_error("lax_friedrichs_step: non-finite density produced");
  }
  return DensityField(rho.grid, std::move(out));
}

SimulationRun run(const SolverConfig& config, const DensityField& initial) {
  config.validate();
  if (initial.grid.n_cells != config.grid.n_cells) {
    throw std::invalid_argument("run: initial field does not match the solver grid");
  }
  if (!all_finite(initial.values)) {
    throw std::runtime_error("run: initial field contains non-finite values");
  }

  SimulationRun result{config, initial, {}, {}, false, 0};
  if (config.model == ModelKind::NonlocalLWR) {
    result.outside_theory =
        !(initial.min_value() > 0.0) || initial.max_value() > 1.0;
  }

  // The initial state is always the first snapshot.
  result.snapshots.emplace_back(0.0, initial);
  std::vector<double> pending(config.snapshot_times);
  std::sort(pending.begin(), pending.end());
  pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
  std::size_t snap_idx = 0;
  while (snap_idx < pending.size() && pending[snap_idx] <= kEventTol) ++snap_idx;

  record(result.diagnostics, 0.0, initial, 0);

  Stepper stepper(config);
  std::vector<double> rho = initial.values;
  std::vector<double> next(rho.size());
  double t = 0.0;
  std::int64_t steps = 0;
  int diag_idx = 1;

  const double t_end = config.t_end;
  while (t < t_end - kEventTol) {
    double event = t_end;
    if (snap_idx < pending.size()) event = std::min(event, pending[snap_idx]);
    const double diag_time = config.diagnostic_interval * static_cast<double>(diag_idx);
    if (diag_time < t_end) event = std::min(event, diag_time);

    const double speed = stepper.prepare(rho);
    double dt = config.cfl * config.grid.dx() / speed;
    double t_next = t + dt;
    if (t_next >= event - kEventTol) {
      dt = event - t;
      t_next = event;
    }
    if (!(dt > 0.0)) {
      throw std::runtime_error("run: time step collapsed at t=" + std::to_string(t));
    }

    stepper.advance(rho, next, dt);
    rho.swap(next);
    ++steps;
    t = t_next;

    if (!all_finite(rho)) {
      throw std::runtime_error("run: non-finite density at step " + std::to_string(steps) +
                               ", t=" + std::to_string(t));
    }

    if (snap_idx < pending.size() && std::abs(t - pending[snap_idx]) <= kEventTol) {
      result.snapshots.emplace_back(pending[snap_idx], DensityField(config.grid, rho));
      ++snap_idx;
    }
    if (std::abs(t - diag_time) <= kEventTol) {
      record(result.diagnostics, t, DensityField(config.grid, rho), steps);
      ++diag_idx;
    } else if (std::abs(t - t_end) <= kEventTol &&
               std::abs(result.diagnostics.times.back() - t) > kEventTol) {
      record(result.diagnostics, t, DensityField(config.grid, rho), steps);
    }
  }

  result.total_steps = steps;
  return result;
}

}  // namespace ringlwr
