#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ringlwr {

enum class KernelShape { Constant, LinearDecreasing, RescaledProfile, Tabulated };

/**
 * Look-ahead weight w_δ defined on [0, δ], δ ∈ (0, 1] a fraction of the ring.
 *
 * Kernels are normalized so that ∫₀^δ w_δ(s) ds = 1: the two closed-form
 * shapes are exact, tabulated samples are rescaled at construction, and a
 * rescaled profile w(s/δ)/δ must integrate to 1 within 1e-6 (a correction
 * factor absorbs the residual). Nonnegativity is checked on a dense sample.
 */
class KernelSpec {
 public:
  static KernelSpec constant(double delta);
  static KernelSpec linear_decreasing(double delta);
  /// profile is w(·) on [0,1]; the kernel is w(s/δ)/δ.
  static KernelSpec rescaled(double delta, std::function<double(double)> profile);
  /// samples are values of w_δ at uniform nodes spanning [0, δ]; rescaled to unit mass.
  static KernelSpec tabulated(double delta, std::vector<double> samples);

  /// w_δ(s). Throws std::domain_error outside [0, δ].
  double eval(double s) const;

  double delta() const { return delta_; }
  KernelShape shape() const { return shape_; }
  std::string shape_name() const;
  /// True iff the kernel is non-increasing and non-constant on [0, δ].
  bool admissible() const { return admissible_; }

 private:
  KernelSpec(double delta, KernelShape shape);
  void finalize();

  double delta_;
  KernelShape shape_;
  std::function<double(double)> profile_;  // RescaledProfile only
  std::vector<double> samples_;            // Tabulated only
  double correction_ = 1.0;
  bool admissible_ = false;
};

struct KernelMoments {
  double nu;      // ∫ s·w_δ(s) ds
  double mass;    // ∫ w_δ(s) ds, ≈ 1
  double w0;      // w_δ(0)
  double wdelta;  // w_δ(δ)
};

/// Moments by composite trapezoid with quad_nodes intervals (≥ 16).
/// Throws std::runtime_error if the measured mass is off unity by more than 1e-6.
KernelMoments compute_moments(const KernelSpec& spec, std::size_t quad_nodes = 1024);

/// Sampled monotonicity check: non-increasing within 1e-12 slack and
/// max − min > 1e-12 over `samples` uniform nodes (≥ 32).
bool validate_admissibility(const KernelSpec& spec, std::size_t samples = 512);

}  // namespace ringlwr
