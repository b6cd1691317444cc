#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ringlwr/diagnostics.hpp"
#include "ringlwr/grid.hpp"
#include "ringlwr/kernel.hpp"

namespace ringlwr {

enum class ModelKind { LocalLWR, NonlocalLWR };

/// Greenshields law U(ρ) = 1 − ρ; tagged for future speed laws.
struct DesiredSpeed {
  enum class Kind { Greenshields };
  Kind kind = Kind::Greenshields;

  double operator()(double rho) const { return 1.0 - rho; }
  double slope_bound() const { return 1.0; }  // sup |U'|
};

struct SolverConfig {
  ModelKind model = ModelKind::NonlocalLWR;
  std::optional<KernelSpec> kernel;  // required for the nonlocal model
  DesiredSpeed speed_law;
  PeriodicGrid grid;
  double cfl = 0.5;
  double t_end = 1.0;
  std::vector<double> snapshot_times;
  double diagnostic_interval = 0.01;

  void validate() const;
};

struct SimulationRun {
  SolverConfig config;
  DensityField initial;
  DiagnosticsSeries diagnostics;
  std::vector<std::pair<double, DensityField>> snapshots;
  bool outside_theory = false;  // initial data violates 0 < ρ_min ≤ ρ_max ≤ 1
  std::int64_t total_steps = 0;
};

/// Largest local characteristic bound, floored at 1e-6. Local model:
/// max|1 − 2ρ|. Nonlocal: max(|U(W[ρ])| + ρ·sup|U'|), a conservative bound.
double max_wave_speed(const DensityField& rho, const SolverConfig& config);

/// One Lax-Friedrichs step: ρ_j ← ½(ρ_{j−1}+ρ_{j+1}) − dt/(2dx)(F_{j+1}−F_{j−1})
/// with F = ρ·U(W[ρ]) (nonlocal) or ρ·U(ρ) (local). Throws if dt violates the
/// CFL bound or the result is not finite.
DensityField lax_friedrichs_step(const DensityField& rho, const SolverConfig& config,
                                 double dt);

/// Advances 0 → t_end with adaptive dt, clipping steps to land exactly on
/// snapshot and diagnostic times. The initial state is always the first
/// snapshot; nonlocal runs with densities outside (0, 1] are tagged, not aborted.
SimulationRun run(const SolverConfig& config, const DensityField& initial);

}  // namespace ringlwr
