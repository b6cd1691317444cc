#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ringlwr/diagnostics.hpp"
#include "ringlwr/grid.hpp"
#include "ringlwr/solver.hpp"

namespace ringlwr {

enum class Scenario {
  BellShape,         // 0.4 + 0.6 exp(-100 (x-0.5)^2)
  SineWave,          // 0.5 + 0.4 sin(4πx)
  LinearRamp,        // βx
  PiecewiseConstant, // 0.25 on [0,0.5), 0.75 on [0.5,1)
  CompactSupport,    // smooth bump on |x-c| < r, zero outside
  Custom,            // interpolated from a CSV of (x, rho) rows
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::string description;  // presets document their configuration here
  Scenario scenario = Scenario::BellShape;
  double beta = 0.5;          // LinearRamp
  double bump_center = 0.5;   // CompactSupport
  double bump_radius = 0.15;
  double bump_height = 0.8;
  std::string custom_file;

  ModelKind model = ModelKind::NonlocalLWR;
  std::optional<KernelSpec> kernel;

  int n_cells = 5000;
  double cfl = 0.5;
  double t_end = 6.0;
  std::vector<double> snapshot_times;
  double diagnostic_interval = 0.01;

  RateKind fit_kind = RateKind::Exponential;
  std::optional<std::pair<double, double>> fit_window;
  int spectral_kmax = 256;

  std::string output_dir = "out";
  unsigned seed = 0;
};

const char* scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

/// The scenario's density profile as a function of position.
double scenario_density(const ExperimentConfig& config, double x);

/// Cell-centered sampling of the scenario profile.
DensityField build_initial(const ExperimentConfig& config, const PeriodicGrid& grid);

/// Parses a JSON experiment description (see README for the schema).
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

/// Built-in experiment matrix; `fast` drops the grid to 1000 cells.
ExperimentConfig preset(const std::string& name, bool fast = false);
std::vector<std::string> preset_names();

struct ExperimentResult {
  bool ok = false;
  std::string error;
  nlohmann::json meta;
};

/// Runs one experiment and writes diagnostics.csv, snapshot_t*.csv and
/// meta.json under config.output_dir. Failures land in meta["error"].
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepRow {
  std::string scenario;
  std::string model;
  std::optional<double> delta;
  std::optional<double> alpha;
  std::optional<double> rate;
  bool stagnated = false;
  std::string error;
};

/// Runs every config (workers in parallel, one output directory per run) and
/// writes one summary row per run; individual failures do not stop the sweep.
std::vector<SweepRow> sweep(const std::vector<ExperimentConfig>& configs,
                            const std::string& summary_csv_path, int workers = 0);

/// Formats a floating value for CSV output (shortest round-trip form).
std::string csv_number(double v);

}  // namespace ringlwr
