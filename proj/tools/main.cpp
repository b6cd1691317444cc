#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlwr/experiments.hpp"
#include "ringlwr/spectral.hpp"
#include "ringlwr/verify_suites.hpp"

namespace fs = std::filesystem;
using ringlwr::csv_number;

namespace {

int cmd_simulate(const std::string& preset_name, const std::string& config_path,
                 const std::string& out_dir, bool fast, int n_cells, double t_end,
                 double cfl) {
  ringlwr::ExperimentConfig cfg = !preset_name.empty()
                                      ? ringlwr::preset(preset_name, fast)
                                      : ringlwr::load_config(config_path);
  if (fast && preset_name.empty()) cfg.n_cells = std::min(cfg.n_cells, 1000);
  if (n_cells > 0) cfg.n_cells = n_cells;
  if (t_end > 0.0) {
    cfg.t_end = t_end;
    std::erase_if(cfg.snapshot_times, [&](double t) { return t > cfg.t_end; });
    if (cfg.fit_window && cfg.fit_window->second > cfg.t_end) cfg.fit_window.reset();
  }
  if (cfl > 0.0) cfg.cfl = cfl;
  if (!out_dir.empty()) cfg.output_dir = out_dir;

  const ringlwr::ExperimentResult result = ringlwr::run_experiment(cfg);
  if (result.meta.value("outside_theory", false)) {
    std::cerr << "warning: initial data violates 0 < rho_min <= rho_max <= 1; "
                 "run tagged outside_theory\n";
  }
  if (!result.ok) {
    std::cerr << "error: " << result.error << " (details in meta.json)\n";
    return 1;
  }
  std::cout << "wrote " << cfg.output_dir << " (meta.json, diagnostics.csv, snapshots)\n";
  return 0;
}

int cmd_sweep(const std::vector<std::string>& inputs, const std::string& out_dir,
              bool fast, int workers) {
  std::vector<std::string> files;
  for (const std::string& input : inputs) {
    if (fs::is_directory(input)) {
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
      }
    } else {
      files.push_back(input);
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<ringlwr::ExperimentConfig> configs;
  configs.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    ringlwr::ExperimentConfig cfg = ringlwr::load_config(files[i]);
    if (fast) cfg.n_cells = std::min(cfg.n_cells, 1000);
    char label[32];
    std::snprintf(label, sizeof(label), "run_%03zu", i);
    cfg.output_dir = (fs::path(out_dir) / (std::string(label) + "_" + cfg.name)).string();
    configs.push_back(std::move(cfg));
  }

  fs::create_directories(out_dir);
  const auto rows =
      ringlwr::sweep(configs, (fs::path(out_dir) / "summary.csv").string(), workers);
  int failures = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      ++failures;
      std::cerr << "run failed: " << row.error << '\n';
    }
  }
  std::cout << "summary: " << (fs::path(out_dir) / "summary.csv").string() << " ("
            << rows.size() << " rows, " << failures << " failed)\n";
  return 0;  // individual failures are recorded per row; the sweep itself succeeded
}

int cmd_spectral(const std::string& kernel_shape, double delta, int kmax,
                 const std::vector<double>& samples, const std::string& out_dir) {
  ringlwr::KernelSpec spec = [&]() {
    if (kernel_shape == "constant") return ringlwr::KernelSpec::constant(delta);
    if (kernel_shape == "linear") return ringlwr::KernelSpec::linear_decreasing(delta);
    if (kernel_shape == "tabulated") return ringlwr::KernelSpec::tabulated(delta, samples);
    throw CLI::ValidationError("--kernel must be constant, linear or tabulated");
  }();

  const ringlwr::SpectralReport report = ringlwr::stability_constant(spec, kmax);

  fs::create_directories(out_dir);
  std::ofstream csv(fs::path(out_dir) / "spectrum.csv");
  csv << "k,b,c,re_eig,im_eig,two_pi_k_b\n";
  for (int k = 1; k <= report.k_max; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    csv << k << ',' << csv_number(report.b[i]) << ',' << csv_number(report.c[i]) << ','
        << csv_number(report.eigenvalues[i].real()) << ','
        << csv_number(report.eigenvalues[i].imag()) << ','
        << csv_number(-report.eigenvalues[i].real()) << '\n';
  }

  nlohmann::json sidecar = {
      {"kernel", {{"shape", spec.shape_name()}, {"delta", spec.delta()}}},
      {"k_max", report.k_max},
      {"alpha", report.alpha},
      {"alpha_argmin_k", report.alpha_argmin},
      {"tail_bound", report.tail_bound},
      {"tail_below_min", report.tail_below_min},
      {"admissible", spec.admissible()},
  };
  std::ofstream js(fs::path(out_dir) / "spectrum.json");
  js << sidecar.dump(2) << '\n';

  if (report.tail_below_min) {
    std::cerr << "warning: analytic tail bound " << report.tail_bound
              << " lies below the discrete minimum " << report.alpha
              << "; alpha may be attained beyond k_max\n";
  }
  std::cout << "alpha = " << report.alpha << " (k = " << report.alpha_argmin
            << "), tail bound = " << report.tail_bound << '\n';
  return 0;
}

int cmd_verify(unsigned seed, int count) {
  const auto suites = ringlwr::verify::run_all(seed, count);
  bool all_ok = true;
  std::printf("%-24s %8s %8s %14s %14s %s\n", "suite", "cases", "failed", "worst lhs",
              "worst rhs", "status");
  for (const auto& s : suites) {
    all_ok = all_ok && s.passed();
    std::printf("%-24s %8d %8d %14.6e %14.6e %s\n", s.name.c_str(), s.cases, s.failures,
                s.worst_lhs, s.worst_rhs, s.passed() ? "pass" : "FAIL");
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ring-road traffic flow solver and stability laboratory"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run one experiment from a preset or config");
  std::string preset_name, config_path, out_dir;
  bool fast = false;
  int n_cells = 0;
  double t_end = 0.0, cfl = 0.0;
  simulate->add_option("--preset", preset_name, "Built-in experiment name (see `presets`)");
  simulate->add_option("config", config_path, "JSON experiment config");
  simulate->add_option("--out", out_dir, "Output directory (overrides config)");
  simulate->add_flag("--fast", fast, "Drop to 1000 cells for quick runs");
  simulate->add_option("--n-cells", n_cells, "Override grid resolution");
  simulate->add_option("--t-end", t_end, "Override final time");
  simulate->add_option("--cfl", cfl, "Override CFL number");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a batch of configs and summarize");
  std::vector<std::string> sweep_inputs;
  std::string sweep_out = "out/sweep";
  int workers = 0;
  bool sweep_fast = false;
  sweep_cmd->add_option("inputs", sweep_inputs, "Config files or directories")->required();
  sweep_cmd->add_option("--out", sweep_out, "Sweep output directory");
  sweep_cmd->add_option("--workers", workers, "Parallel runs (default: hardware)");
  sweep_cmd->add_flag("--fast", sweep_fast, "Drop to 1000 cells for quick runs");

  // spectral
  auto* spectral = app.add_subcommand("spectral", "Fourier damping table for a kernel");
  std::string kernel_shape = "linear";
  double delta = 0.2;
  int kmax = 256;
  std::vector<double> samples;
  std::string spectral_out = "out/spectral";
  spectral->add_option("--kernel", kernel_shape, "constant | linear | tabulated");
  spectral->add_option("--delta", delta, "Look-ahead horizon in (0,1]")->required();
  spectral->add_option("--kmax", kmax, "Highest wavenumber");
  spectral->add_option("--samples", samples, "Tabulated kernel samples");
  spectral->add_option("--out", spectral_out, "Output directory");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the inequality suites");
  unsigned seed = 20240901;
  int count = 100;
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--count", count, "Cases per suite");

  // presets
  auto* presets = app.add_subcommand("presets", "List built-in experiments");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      if (preset_name.empty() == config_path.empty()) {
        std::cerr << "simulate: pass exactly one of --preset or a config file\n";
        return 2;
      }
      return cmd_simulate(preset_name, config_path, out_dir, fast, n_cells, t_end, cfl);
    }
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_inputs, sweep_out, sweep_fast, workers);
    if (spectral->parsed())
      return cmd_spectral(kernel_shape, delta, kmax, samples, spectral_out);
    if (verify->parsed()) return cmd_verify(seed, count);
    if (presets->parsed()) {
      for (const std::string& name : ringlwr::preset_names()) std::cout << name << '\n';
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}
