#include "ringlwr/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ringlwr/numerics.hpp"

namespace ringlwr {

namespace {
constexpr double kMonotoneSlack = 1e-12;
}

KernelSpec::KernelSpec(double delta, KernelShape shape) : delta_(delta), shape_(shape) {
  if (!(delta > 0.0) || delta > 1.0) {
    throw std::invalid_argument("KernelSpec: delta must lie in (0, 1]");
  }
}

KernelSpec KernelSpec::constant(double delta) {
  KernelSpec spec(delta, KernelShape::Constant);
  spec.finalize();
  return spec;
}

KernelSpec KernelSpec::linear_decreasing(double delta) {
  KernelSpec spec(delta, KernelShape::LinearDecreasing);
  spec.finalize();
  return spec;
}

KernelSpec KernelSpec::rescaled(double delta, std::function<double(double)> profile) {
  if (!profile) throw std::invalid_argument("KernelSpec: null profile");
  KernelSpec spec(delta, KernelShape::RescaledProfile);
  spec.profile_ = std::move(profile);
  // Unit mass of w_δ(s)=w(s/δ)/δ over [0,δ] equals the profile mass over [0,1].
  const double mass = gauss8([&](double u) { return spec.profile_(u); }, 0.0, 1.0, 256);
  if (std::abs(mass - 1.0) > 1e-6) {
    throw std::runtime_error("KernelSpec: rescaled profile mass deviates from 1 by more than 1e-6");
  }
  spec.correction_ = 1.0 / mass;
  spec.finalize();
  return spec;
}

KernelSpec KernelSpec::tabulated(double delta, std::vector<double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("KernelSpec: need at least 2 samples");
  KernelSpec spec(delta, KernelShape::Tabulated);
  spec.samples_ = std::move(samples);
  for (double v : spec.samples_) {
    if (!(v >= 0.0)) throw std::runtime_error("KernelSpec: tabulated kernel must be nonnegative");
  }
  // Piecewise-linear mass is the trapezoid sum exactly; rescale to 1.
  const double h = delta / static_cast<double>(spec.samples_.size() - 1);
  CompensatedSum acc;
  acc.add(0.5 * spec.samples_.front());
  for (std::size_t i = 1; i + 1 < spec.samples_.size(); ++i) acc.add(spec.samples_[i]);
  acc.add(0.5 * spec.samples_.back());
  const double mass = acc.value() * h;
  if (!(mass > 0.0)) throw std::runtime_error("KernelSpec: tabulated kernel has zero mass");
  for (double& v : spec.samples_) v /= mass;
  spec.finalize();
  return spec;
}

void KernelSpec::finalize() {
  for (int i = 0; i <= 1024; ++i) {
    const double s = delta_ * static_cast<double>(i) / 1024.0;
    if (!(eval(s) >= 0.0)) {
      throw std::runtime_error("KernelSpec: kernel is negative at s=" + std::to_string(s));
    }
  }
  admissible_ = validate_admissibility(*this, 512);
}

double KernelSpec::eval(double s) const {
  if (s < 0.0 || s > delta_) {
    throw std::domain_error("KernelSpec::eval: s outside [0, delta]");
  }
  switch (shape_) {
    case KernelShape::Constant:
      return 1.0 / delta_;
    case KernelShape::LinearDecreasing:
      return 2.0 * (delta_ - s) / (delta_ * delta_);
    case KernelShape::RescaledProfile:
      return correction_ * profile_(s / delta_) / delta_;
    case KernelShape::Tabulated: {
      const double pos = s / delta_ * static_cast<double>(samples_.size() - 1);
      const auto i = static_cast<std::size_t>(std::min(
          pos, static_cast<double>(samples_.size() - 2)));
      const double frac = pos - static_cast<double>(i);
      return samples_[i] + frac * (samples_[i + 1] - samples_[i]);
    }
  }
  throw std::logic_error("KernelSpec::eval: unknown shape");
}

std::string KernelSpec::shape_name() const {
  switch (shape_) {
    case KernelShape::Constant: return "constant";
    case KernelShape::LinearDecreasing: return "linear";
    case KernelShape::RescaledProfile: return "rescaled";
    case KernelShape::Tabulated: return "tabulated";
  }
  return "unknown";
}

KernelMoments compute_moments(const KernelSpec& spec, std::size_t quad_nodes) {
  if (quad_nodes < 16) {
    throw std::invalid_argument("compute_moments: quad_nodes must be at least 16");
  }
  const double delta = spec.delta();
  const double mass =
      trapezoid([&](double s) { return spec.eval(s); }, 0.0, delta, quad_nodes);
  if (std::abs(mass - 1.0) > 1e-6) {
    throw std::runtime_error("compute_moments: kernel mass deviates from 1 by more than 1e-6");
  }
  const double nu =
      trapezoid([&](double s) { return s * spec.eval(s); }, 0.0, delta, quad_nodes);
  return KernelMoments{nu, mass, spec.eval(0.0), spec.eval(delta)};
}

bool validate_admissibility(const KernelSpec& spec, std::size_t samples) {
  if (samples < 32) {
    throw std::invalid_argument("validate_admissibility: need at least 32 samples");
  }
  const double delta = spec.delta();
  double prev = spec.eval(0.0);
  double lo = prev;
  double hi = prev;
  for (std::size_t i = 1; i < samples; ++i) {
    const double s = delta * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double v = spec.eval(s);
    if (v > prev + kMonotoneSlack) return false;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    prev = v;
  }
  return hi - lo > kMonotoneSlack;
}

}  // namespace ringlwr
