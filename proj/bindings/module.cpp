#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringlwr/diagnostics.hpp"
#include "ringlwr/experiments.hpp"
#include "ringlwr/nonlocal_ops.hpp"
#include "ringlwr/oracles.hpp"
#include "ringlwr/solver.hpp"
#include "ringlwr/spectral.hpp"
#include "ringlwr/verify_suites.hpp"

namespace py = pybind11;
using namespace ringlwr;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

DensityField field_from_array(const PeriodicGrid& grid, py::array_t<double> values) {
  auto buf = values.request();
  if (buf.ndim != 1 || buf.shape[0] != grid.n_cells) {
    throw std::invalid_argument("values must be a 1-D array of length n_cells");
  }
  const auto* data = static_cast<const double*>(buf.ptr);
  return DensityField(grid, std::vector<double>(data, data + grid.n_cells));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ring-road traffic flow solver and stability laboratory";

  py::class_<KernelSpec>(m, "KernelSpec")
      .def_static("constant", &KernelSpec::constant, py::arg("delta"))
      .def_static("linear_decreasing", &KernelSpec::linear_decreasing, py::arg("delta"))
      .def_static("rescaled", &KernelSpec::rescaled, py::arg("delta"), py::arg("profile"))
      .def_static("tabulated", &KernelSpec::tabulated, py::arg("delta"), py::arg("samples"))
      .def("eval", &KernelSpec::eval, py::arg("s"))
      .def_property_readonly("delta", &KernelSpec::delta)
      .def_property_readonly("shape", &KernelSpec::shape_name)
      .def_property_readonly("admissible", &KernelSpec::admissible)
      .def("__repr__", [](const KernelSpec& k) {
        return "KernelSpec(" + k.shape_name() + ", delta=" + csv_number(k.delta()) + ")";
      });

  py::class_<KernelMoments>(m, "KernelMoments")
      .def_readonly("nu", &KernelMoments::nu)
      .def_readonly("mass", &KernelMoments::mass)
      .def_readonly("w0", &KernelMoments::w0)
      .def_readonly("wdelta", &KernelMoments::wdelta);

  m.def("compute_moments", &compute_moments, py::arg("spec"), py::arg("quad_nodes") = 1024);
  m.def("validate_admissibility", &validate_admissibility, py::arg("spec"), py::arg("samples") = 512);

  py::class_<PeriodicGrid>(m, "PeriodicGrid")
      .def(py::init<int>(), py::arg("n_cells"))
      .def_readonly("n_cells", &PeriodicGrid::n_cells)
      .def_property_readonly("dx", &PeriodicGrid::dx)
      .def("center", &PeriodicGrid::center, py::arg("j"));

  py::class_<DensityField>(m, "DensityField")
      .def(py::init(&field_from_array), py::arg("grid"), py::arg("values"))
      .def_static("sample", &DensityField::sample, py::arg("grid"), py::arg("f"))
      .def_property_readonly("grid", [](const DensityField& f) { return f.grid; })
      .def_property_readonly("values",
                             [](const DensityField& f) { return to_array(f.values); })
      .def_property_readonly("mean", &DensityField::mean)
      .def_property_readonly("min", &DensityField::min_value)
      .def_property_readonly("max", &DensityField::max_value);

  m.def("nonlocal_average", &nonlocal_average, py::arg("rho"), py::arg("spec"));
  m.def("nonlocal_gradient", &nonlocal_gradient, py::arg("rho"), py::arg("spec"),
        py::arg("moments"));
  m.def("l2_distance_to_mean", &l2_distance_to_mean, py::arg("rho"));
  m.def("fourier_mode", &fourier_mode, py::arg("rho"), py::arg("k"));

  py::class_<SpectralReport>(m, "SpectralReport")
      .def_readonly("k_max", &SpectralReport::k_max)
      .def_property_readonly("b", [](const SpectralReport& r) { return to_array(r.b); })
      .def_property_readonly("c", [](const SpectralReport& r) { return to_array(r.c); })
      .def_readonly("eigenvalues", &SpectralReport::eigenvalues)
      .def_readonly("alpha", &SpectralReport::alpha)
      .def_readonly("alpha_argmin", &SpectralReport::alpha_argmin)
      .def_readonly("tail_bound", &SpectralReport::tail_bound)
      .def_readonly("tail_below_min", &SpectralReport::tail_below_min);

  m.def("fourier_coefficients", &fourier_coefficients, py::arg("spec"), py::arg("moments"),
        py::arg("k"));
  m.def("stability_constant", &stability_constant, py::arg("spec"), py::arg("k_max") = 256);
  m.def("evolve_linearized", &evolve_linearized, py::arg("spec"), py::arg("rho_bar"),
        py::arg("initial_modes"), py::arg("t"));

  py::enum_<ModelKind>(m, "ModelKind")
      .value("LocalLWR", ModelKind::LocalLWR)
      .value("NonlocalLWR", ModelKind::NonlocalLWR);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init([](ModelKind model, std::optional<KernelSpec> kernel, PeriodicGrid grid,
                       double cfl, double t_end, std::vector<double> snapshot_times,
                       double diagnostic_interval) {
             return SolverConfig{model,
                                 std::move(kernel),
                                 DesiredSpeed{},
                                 grid,
                                 cfl,
                                 t_end,
                                 std::move(snapshot_times),
                                 diagnostic_interval};
           }),
           py::arg("model"), py::arg("kernel"), py::arg("grid"), py::arg("cfl") = 0.5,
           py::arg("t_end") = 1.0, py::arg("snapshot_times") = std::vector<double>{},
           py::arg("diagnostic_interval") = 0.01)
      .def_readonly("model", &SolverConfig::model)
      .def_readonly("cfl", &SolverConfig::cfl)
      .def_readonly("t_end", &SolverConfig::t_end);

  py::class_<DiagnosticsSeries>(m, "DiagnosticsSeries")
      .def_property_readonly("times",
                             [](const DiagnosticsSeries& s) { return to_array(s.times); })
      .def_property_readonly("energy",
                             [](const DiagnosticsSeries& s) { return to_array(s.energy); })
      .def_property_readonly("l2_error",
                             [](const DiagnosticsSeries& s) { return to_array(s.l2_error); })
      .def_property_readonly("kl", [](const DiagnosticsSeries& s) { return to_array(s.kl); })
      .def_property_readonly("mass",
                             [](const DiagnosticsSeries& s) { return to_array(s.mass); })
      .def_property_readonly("min_rho",
                             [](const DiagnosticsSeries& s) { return to_array(s.min_rho); })
      .def_property_readonly("max_rho",
                             [](const DiagnosticsSeries& s) { return to_array(s.max_rho); });

  py::class_<SimulationRun>(m, "SimulationRun")
      .def_readonly("diagnostics", &SimulationRun::diagnostics)
      .def_readonly("snapshots", &SimulationRun::snapshots)
      .def_readonly("outside_theory", &SimulationRun::outside_theory)
      .def_readonly("total_steps", &SimulationRun::total_steps);

  m.def("max_wave_speed", &max_wave_speed, py::arg("rho"), py::arg("config"));
  m.def("lax_friedrichs_step", &lax_friedrichs_step, py::arg("rho"), py::arg("config"),
        py::arg("dt"));
  // Keeps the GIL: rescaled kernels may call back into a Python profile.
  m.def("run", &run, py::arg("config"), py::arg("initial"));

  m.def("energy", &energy, py::arg("rho"));
  m.def("kl_divergence", &kl_divergence, py::arg("rho"));
  m.def("theoretical_rate_bound", &theoretical_rate_bound, py::arg("spec"),
        py::arg("moments"), py::arg("alpha"), py::arg("rho_min"));

  py::enum_<RateKind>(m, "RateKind")
      .value("Exponential", RateKind::Exponential)
      .value("Linear", RateKind::Linear);

  py::class_<RateFit>(m, "RateFit")
      .def_readonly("kind", &RateFit::kind)
      .def_readonly("rate", &RateFit::rate)
      .def_readonly("r_squared", &RateFit::r_squared)
      .def_readonly("window", &RateFit::window);

  m.def("fit_rate", &fit_rate, py::arg("series"), py::arg("kind"), py::arg("window"));
  m.def("stagnated", &stagnated, py::arg("series"));

  m.def("local_linear_exact", &local_linear_exact, py::arg("beta"), py::arg("x"),
        py::arg("t"));
  m.def("traveling_wave_exact", &traveling_wave_exact, py::arg("rho0"), py::arg("delta"),
        py::arg("t"));

  py::class_<InequalityCheck>(m, "InequalityCheck")
      .def_readonly("lhs", &InequalityCheck::lhs)
      .def_readonly("rhs", &InequalityCheck::rhs)
      .def_readonly("holds", &InequalityCheck::holds);

  m.def("check_nonlocal_poincare", &check_nonlocal_poincare, py::arg("rho"), py::arg("spec"),
        py::arg("alpha"));
  m.def("check_nonlinear_poincare", &check_nonlinear_poincare, py::arg("rho"),
        py::arg("spec"));
  m.def("check_hardy_littlewood", &check_hardy_littlewood, py::arg("rho_samples"),
        py::arg("f_monotone"), py::arg("shift"));
  m.def("mode_damping_oracle", &mode_damping_oracle, py::arg("spec"), py::arg("k"));

  m.def(
      "run_experiment",
      [](const std::string& config_json) {
        const ExperimentConfig cfg = parse_config(nlohmann::json::parse(config_json));
        const ExperimentResult result = run_experiment(cfg);
        return py::make_tuple(result.ok, result.meta.dump());
      },
      py::arg("config_json"),
      "Runs one experiment from a JSON string; returns (ok, meta_json).");
  m.def("preset_names", &preset_names);

  py::class_<verify::SuiteResult>(m, "SuiteResult")
      .def_readonly("name", &verify::SuiteResult::name)
      .def_readonly("cases", &verify::SuiteResult::cases)
      .def_readonly("failures", &verify::SuiteResult::failures)
      .def_readonly("worst_lhs", &verify::SuiteResult::worst_lhs)
      .def_readonly("worst_rhs", &verify::SuiteResult::worst_rhs)
      .def("passed", &verify::SuiteResult::passed);

  m.def("run_verification", &verify::run_all, py::arg("seed") = 20240901,
        py::arg("count") = 100);

  m.attr("__version__") = "0.1.0";
}
