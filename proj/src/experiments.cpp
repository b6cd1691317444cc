#include "ringlwr/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ringlwr/nonlocal_ops.hpp"
#include "ringlwr/spectral.hpp"

namespace ringlwr {

namespace fs = std::filesystem;

std::string csv_number(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::BellShape: return "bell_shape";
    case Scenario::SineWave: return "sine_wave";
    case Scenario::LinearRamp: return "linear_ramp";
    case Scenario::PiecewiseConstant: return "piecewise_constant";
    case Scenario::CompactSupport: return "compact_support";
    case Scenario::Custom: return "custom";
  }
  return "unknown";
}

Scenario scenario_from_name(const std::string& name) {
  if (name == "bell_shape") return Scenario::BellShape;
  if (name == "sine_wave") return Scenario::SineWave;
  if (name == "linear_ramp") return Scenario::LinearRamp;
  if (name == "piecewise_constant") return Scenario::PiecewiseConstant;
  if (name == "compact_support") return Scenario::CompactSupport;
  if (name == "custom") return Scenario::Custom;
  throw std::invalid_argument("unknown scenario: " + name);
}

namespace {

std::vector<std::pair<double, double>> load_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double x, v;
    if (ss >> x >> v) rows.emplace_back(x, v);
  }
  if (rows.size() < 2) throw std::runtime_error("profile file needs at least two rows: " + path);
  std::sort(rows.begin(), rows.end());
  return rows;
}

double interp_periodic(const std::vector<std::pair<double, double>>& rows, double x) {
  x -= std::floor(x);
  auto it = std::upper_bound(rows.begin(), rows.end(), std::make_pair(x, 1e300));
  double x0, v0, x1, v1;
  if (it == rows.begin()) {
    x0 = rows.back().first - 1.0;
    v0 = rows.back().second;
    x1 = rows.front().first;
    v1 = rows.front().second;
  } else if (it == rows.end()) {
    x0 = rows.back().first;
    v0 = rows.back().second;
    x1 = rows.front().first + 1.0;
    v1 = rows.front().second;
  } else {
    x0 = std::prev(it)->first;
    v0 = std::prev(it)->second;
    x1 = it->first;
    v1 = it->second;
  }
  const double w = (x1 > x0) ? (x - x0) / (x1 - x0) : 0.0;
  return v0 + w * (v1 - v0);
}

KernelSpec kernel_from_json(const nlohmann::json& j) {
  const std::string shape = j.at("shape").get<std::string>();
  const double delta = j.at("delta").get<double>();
  if (shape == "constant") return KernelSpec::constant(delta);
  if (shape == "linear") return KernelSpec::linear_decreasing(delta);
  if (shape == "tabulated") {
    return KernelSpec::tabulated(delta, j.at("samples").get<std::vector<double>>());
  }
  throw std::invalid_argument("unknown kernel shape: " + shape);
}

nlohmann::json kernel_to_json(const KernelSpec& spec) {
  return {{"shape", spec.shape_name()}, {"delta", spec.delta()}};
}

std::vector<double> default_snapshots(double t_end) {
  std::vector<double> out;
  for (double t : {0.0, 0.5, 1.0, 2.0, 4.0, t_end}) {
    if (t <= t_end && (out.empty() || t > out.back())) out.push_back(t);
  }
  return out;
}

void write_diagnostics_csv(const std::string& path, const DiagnosticsSeries& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "t,energy,l2_error,kl_divergence,mass,min_rho,max_rho\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << csv_number(s.times[i]) << ',' << csv_number(s.energy[i]) << ','
        << csv_number(s.l2_error[i]) << ',' << csv_number(s.kl[i]) << ','
        << csv_number(s.mass[i]) << ',' << csv_number(s.min_rho[i]) << ','
        << csv_number(s.max_rho[i]) << '\n';
  }
}

void write_snapshot_csv(const std::string& dir, double t, const DensityField& rho) {
  char label[32];
  std::snprintf(label, sizeof(label), "%g", t);
  std::ofstream out(dir + "/snapshot_t" + label + ".csv");
  if (!out) throw std::runtime_error("cannot write snapshot in " + dir);
  out << "x,rho\n";
  for (int j = 0; j < rho.size(); ++j) {
    out << csv_number(rho.grid.center(j)) << ','
        << csv_number(rho.values[static_cast<std::size_t>(j)]) << '\n';
  }
}

}  // namespace

double scenario_density(const ExperimentConfig& config, double x) {
  switch (config.scenario) {
    case Scenario::BellShape:
      return 0.4 + 0.6 * std::exp(-100.0 * (x - 0.5) * (x - 0.5));
    case Scenario::SineWave:
      return 0.5 + 0.4 * std::sin(4.0 * std::numbers::pi * x);
    case Scenario::LinearRamp:
      return config.beta * (x - std::floor(x));
    case Scenario::PiecewiseConstant:
      return (x - std::floor(x)) < 0.5 ? 0.25 : 0.75;
    case Scenario::CompactSupport: {
      const double u = (x - config.bump_center) / config.bump_radius;
      if (std::abs(u) >= 1.0) return 0.0;
      return config.bump_height * std::exp(-1.0 / (1.0 - u * u));
    }
    case Scenario::Custom: {
      static thread_local std::string cached_path;
      static thread_local std::vector<std::pair<double, double>> cached_rows;
      if (cached_path != config.custom_file) {
        cached_rows = load_profile_csv(config.custom_file);
        cached_path = config.custom_file;
      }
      return interp_periodic(cached_rows, x);
    }
  }
  throw std::invalid_argument("scenario_density: unknown scenario");
}

DensityField build_initial(const ExperimentConfig& config, const PeriodicGrid& grid) {
  if (config.scenario == Scenario::LinearRamp &&
      (config.beta < 0.0 || config.beta > 1.0)) {
    throw std::invalid_argument("build_initial: beta must lie in [0, 1]");
  }
  if (config.scenario == Scenario::CompactSupport &&
      !(config.bump_radius > 0.0 && config.bump_radius < 0.5)) {
    throw std::invalid_argument("build_initial: bump radius must lie in (0, 0.5)");
  }
  return DensityField::sample(grid, [&](double x) { return scenario_density(config, x); });
}

ExperimentConfig parse_config(const nlohmann::json& j) {
  ExperimentConfig cfg;
  cfg.name = j.value("name", std::string("experiment"));
  cfg.scenario = scenario_from_name(j.at("scenario").get<std::string>());
  cfg.beta = j.value("beta", 0.5);
  if (j.contains("bump")) {
    cfg.bump_center = j["bump"].value("center", 0.5);
    cfg.bump_radius = j["bump"].value("radius", 0.15);
    cfg.bump_height = j["bump"].value("height", 0.8);
  }
  cfg.custom_file = j.value("custom_file", std::string());

  const std::string model = j.value("model", std::string("nonlocal"));
  if (model == "local") {
    cfg.model = ModelKind::LocalLWR;
  } else if (model == "nonlocal") {
    cfg.model = ModelKind::NonlocalLWR;
    if (!j.contains("kernel")) {
      throw std::invalid_argument("config: nonlocal model requires a kernel object");
    }
  } else {
    throw std::invalid_argument("config: model must be 'local' or 'nonlocal'");
  }
  if (j.contains("kernel")) cfg.kernel = kernel_from_json(j["kernel"]);

  cfg.n_cells = j.value("n_cells", 5000);
  cfg.cfl = j.value("cfl", 0.5);
  cfg.t_end = j.value("t_end", 6.0);
  if (j.contains("snapshot_times")) {
    cfg.snapshot_times = j["snapshot_times"].get<std::vector<double>>();
  } else {
    cfg.snapshot_times = default_snapshots(cfg.t_end);
  }
  cfg.diagnostic_interval = j.value("diagnostic_interval", 0.01);

  if (j.contains("fit")) {
    const std::string kind = j["fit"].value("kind", std::string("exponential"));
    if (kind == "exponential") {
      cfg.fit_kind = RateKind::Exponential;
    } else if (kind == "linear") {
      cfg.fit_kind = RateKind::Linear;
    } else {
      throw std::invalid_argument("config: fit.kind must be 'exponential' or 'linear'");
    }
    if (j["fit"].contains("window")) {
      const auto w = j["fit"]["window"].get<std::vector<double>>();
      if (w.size() != 2) throw std::invalid_argument("config: fit.window must be [start, end]");
      cfg.fit_window = {w[0], w[1]};
    }
  } else {
    cfg.fit_kind =
        cfg.model == ModelKind::LocalLWR ? RateKind::Linear : RateKind::Exponential;
  }
  cfg.spectral_kmax = j.value("spectral_kmax", 256);
  cfg.output_dir = j.value("output_dir", std::string("out"));
  cfg.seed = j.value("seed", 0u);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  nlohmann::json j;
  in >> j;
  ExperimentConfig cfg = parse_config(j);
  if (cfg.name == "experiment") cfg.name = fs::path(path).stem().string();
  return cfg;
}

std::vector<std::string> preset_names() {
  return {
      "fig-bell-local",      "fig-bell-linear",      "fig-bell-constant",
      "fig-sine-local",      "fig-sine-linear",      "fig-sine-constant",
      "fig-linear-local",    "fig-linear-linear",    "fig-linear-constant",
      "fig-piecewise-local", "fig-piecewise-linear", "fig-piecewise-constant",
      "fig-compact-linear",
  };
}

ExperimentConfig preset(const std::string& name, bool fast) {
  ExperimentConfig cfg;
  cfg.name = name;

  std::string tail;
  if (name.starts_with("fig-bell-")) {
    cfg.scenario = Scenario::BellShape;
    tail = name.substr(9);
  } else if (name.starts_with("fig-sine-")) {
    cfg.scenario = Scenario::SineWave;
    tail = name.substr(9);
  } else if (name.starts_with("fig-linear-")) {
    cfg.scenario = Scenario::LinearRamp;
    cfg.beta = 0.5;
    tail = name.substr(11);
  } else if (name.starts_with("fig-piecewise-")) {
    cfg.scenario = Scenario::PiecewiseConstant;
    tail = name.substr(14);
  } else if (name.starts_with("fig-compact-")) {
    cfg.scenario = Scenario::CompactSupport;
    tail = name.substr(12);
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }

  // Sine and piecewise runs pair with the half-ring horizon; the others use 0.2.
  const bool half_ring =
      cfg.scenario == Scenario::SineWave || cfg.scenario == Scenario::PiecewiseConstant;
  const double delta = half_ring ? 0.5 : 0.2;

  if (tail == "local") {
    cfg.model = ModelKind::LocalLWR;
    cfg.t_end = 8.0;
    cfg.fit_kind = RateKind::Linear;
    if (cfg.scenario == Scenario::LinearRamp) cfg.fit_window = {2.0, 8.0};
  } else if (tail == "linear") {
    cfg.model = ModelKind::NonlocalLWR;
    cfg.kernel = KernelSpec::linear_decreasing(delta);
    cfg.t_end = 6.0;
    cfg.fit_kind = RateKind::Exponential;
  } else if (tail == "constant") {
    cfg.model = ModelKind::NonlocalLWR;
    cfg.kernel = KernelSpec::constant(delta);
    cfg.t_end = cfg.scenario == Scenario::SineWave ? 4.0 : 6.0;
    cfg.fit_kind = RateKind::Exponential;
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }

  cfg.n_cells = fast ? 1000 : 5000;
  cfg.snapshot_times = default_snapshots(cfg.t_end);
  cfg.output_dir = "out/" + name;

  std::string desc = std::string(scenario_name(cfg.scenario)) + " initial data, ";
  if (cfg.model == ModelKind::LocalLWR) {
    desc += "local model";
  } else {
    desc += "nonlocal model, " + cfg.kernel->shape_name() +
            " kernel, delta=" + csv_number(cfg.kernel->delta());
  }
  cfg.description = desc;
  return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result;
  nlohmann::json& meta = result.meta;

  meta["name"] = config.name;
  if (!config.description.empty()) meta["description"] = config.description;
  meta["scenario"] = scenario_name(config.scenario);
  if (config.scenario == Scenario::LinearRamp) meta["beta"] = config.beta;
  meta["model"] = config.model == ModelKind::LocalLWR ? "local" : "nonlocal";
  if (config.kernel) meta["kernel"] = kernel_to_json(*config.kernel);
  meta["n_cells"] = config.n_cells;
  meta["cfl"] = config.cfl;
  meta["t_end"] = config.t_end;
  meta["diagnostic_interval"] = config.diagnostic_interval;
  meta["snapshot_times"] = config.snapshot_times;
  meta["seed"] = config.seed;

  const fs::path out_dir(config.output_dir);
  try {
    fs::create_directories(out_dir);

    const PeriodicGrid grid(config.n_cells);
    const DensityField rho0 = build_initial(config, grid);

    double alpha = 0.0;
    KernelMoments moments{0.0, 1.0, 0.0, 0.0};
    if (config.model == ModelKind::NonlocalLWR) {
      moments = compute_moments(*config.kernel, 1 << 16);
      const SpectralReport report = stability_constant(*config.kernel, config.spectral_kmax);
      alpha = report.alpha;
      meta["alpha"] = report.alpha;
      meta["alpha_argmin_k"] = report.alpha_argmin;
      meta["tail_bound"] = report.tail_bound;
      meta["nu"] = moments.nu;
      const double rho_min = std::max(rho0.min_value(), 0.0);
      meta["lambda_bound"] =
          theoretical_rate_bound(*config.kernel, moments, std::max(alpha, 0.0), rho_min);
    }

    SolverConfig solver_cfg{config.model, config.kernel, DesiredSpeed{}, grid,
                            config.cfl,   config.t_end,  config.snapshot_times,
                            config.diagnostic_interval};
    const SimulationRun sim = run(solver_cfg, rho0);

    write_diagnostics_csv((out_dir / "diagnostics.csv").string(), sim.diagnostics);
    for (const auto& [t, field] : sim.snapshots) {
      write_snapshot_csv(out_dir.string(), t, field);
    }

    meta["outside_theory"] = sim.outside_theory;
    meta["total_steps"] = sim.total_steps;
    double drift = 0.0;
    for (double m : sim.diagnostics.mass) {
      drift = std::max(drift, std::abs(m - sim.diagnostics.mass.front()));
    }
    meta["mass_drift"] = drift;
    const bool is_stagnant = stagnated(sim.diagnostics);
    meta["stagnated"] = is_stagnant;

    const std::pair<double, double> window =
        config.fit_window.value_or(std::make_pair(0.2 * config.t_end, config.t_end));
    try {
      const RateFit fit = fit_rate(sim.diagnostics, config.fit_kind, window);
      meta["fit"] = {
          {"kind", fit.kind == RateKind::Exponential ? "exponential" : "linear"},
          {"rate", fit.rate},
          {"r_squared", fit.r_squared},
          {"window", {fit.window.first, fit.window.second}},
          {"lambda_bound", meta.contains("lambda_bound") ? meta["lambda_bound"]
                                                         : nlohmann::json()},
          {"stagnated", is_stagnant},
      };
    } catch (const std::exception& ex) {
      meta["fit"] = nullptr;
      meta["fit_error"] = ex.what();
    }

    result.ok = true;
  } catch (const std::exception& ex) {
    result.ok = false;
    result.error = ex.what();
    meta["error"] = ex.what();
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  std::ofstream meta_out(out_dir / "meta.json");
  if (meta_out) meta_out << meta.dump(2) << '\n';
  return result;
}

std::vector<SweepRow> sweep(const std::vector<ExperimentConfig>& configs,
                            const std::string& summary_csv_path, int workers) {
  std::vector<SweepRow> rows(configs.size());
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  workers = std::min<int>(workers, std::max<std::size_t>(configs.size(), 1));

  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= configs.size()) return;
      const ExperimentConfig& cfg = configs[i];
      SweepRow row;
      row.scenario = scenario_name(cfg.scenario);
      row.model = cfg.model == ModelKind::LocalLWR ? "local" : "nonlocal";
      if (cfg.kernel) row.delta = cfg.kernel->delta();
      const ExperimentResult res = run_experiment(cfg);
      if (res.ok) {
        if (res.meta.contains("alpha")) row.alpha = res.meta["alpha"].get<double>();
        if (res.meta.contains("fit") && !res.meta["fit"].is_null()) {
          row.rate = res.meta["fit"]["rate"].get<double>();
        }
        row.stagnated = res.meta.value("stagnated", false);
      } else {
        row.error = res.error;
      }
      rows[i] = std::move(row);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::ofstream out(summary_csv_path);
  if (!out) throw std::runtime_error("cannot write " + summary_csv_path);
  out << "scenario,model,delta,alpha,rate,stagnated,error\n";
  for (const SweepRow& row : rows) {
    out << row.scenario << ',' << row.model << ','
        << (row.delta ? csv_number(*row.delta) : std::string()) << ','
        << (row.alpha ? csv_number(*row.alpha) : std::string()) << ','
        << (row.rate ? csv_number(*row.rate) : std::string()) << ','
        << (row.stagnated ? "true" : "false") << ',' << row.error << '\n';
  }
  return rows;
}

}  // namespace ringlwr
