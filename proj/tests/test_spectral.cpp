#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "ringlwr/spectral.hpp"

using namespace ringlwr;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Closed-form coefficients used as independent oracles for the quadrature.
// Constant kernel 1/δ:   b = (2/δ²)(1−cos a)/ω,  c = (2/δ²)(sin a/ω − δ)
// Linear kernel 2(δ−s)/δ²: b = (6/δ)(a−sin a)/a², c = (6/δ³)((1−cos a)/ω² − δ²/2)
// with ω = 2πk, a = ωδ.
double b_const(int k, double d) {
  const double w = kTwoPi * k;
  return (2.0 / (d * d)) * (1.0 - std::cos(w * d)) / w;
}
double c_const(int k, double d) {
  const double w = kTwoPi * k;
  return (2.0 / (d * d)) * (std::sin(w * d) / w - d);
}
double b_linear(int k, double d) {
  const double a = kTwoPi * k * d;
  return (6.0 / d) * (a - std::sin(a)) / (a * a);
}
double c_linear(int k, double d) {
  const double w = kTwoPi * k;
  const double a = w * d;
  return (6.0 / (d * d * d)) * ((1.0 - std::cos(a)) / (w * w) - d * d / 2.0);
}

}  // namespace

TEST_CASE("quadrature coefficients match the closed forms") {
  for (double delta : {0.2, 0.5, 1.0}) {
    const KernelSpec constant = KernelSpec::constant(delta);
    const KernelSpec linear = KernelSpec::linear_decreasing(delta);
    const KernelMoments mc = compute_moments(constant, 1 << 16);
    const KernelMoments ml = compute_moments(linear, 1 << 16);
    for (int k : {1, 2, 3, 7, 31}) {
      const auto [bc, cc] = fourier_coefficients(constant, mc, k);
      CHECK(bc == doctest::Approx(b_const(k, delta)).epsilon(1e-8).scale(1.0));
      CHECK(cc == doctest::Approx(c_const(k, delta)).epsilon(1e-8).scale(1.0));
      const auto [bl, cl] = fourier_coefficients(linear, ml, k);
      CHECK(bl == doctest::Approx(b_linear(k, delta)).epsilon(1e-8).scale(1.0));
      CHECK(cl == doctest::Approx(c_linear(k, delta)).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("constant kernel at delta=0.5: b vanishes at the resonant mode") {
  const KernelSpec spec = KernelSpec::constant(0.5);
  const KernelMoments m = compute_moments(spec, 1 << 16);
  const auto [b2, c2] = fourier_coefficients(spec, m, 2);
  CHECK(std::abs(b2) < 1e-12);
  const auto [b1, c1] = fourier_coefficients(spec, m, 1);
  CHECK(b1 == doctest::Approx(2.5464790894703254).epsilon(1e-9));  // 8/π
  CHECK(c1 == doctest::Approx(-4.0).epsilon(1e-9));
  CHECK(c2 == doctest::Approx(-4.0).epsilon(1e-9));
}

TEST_CASE("coefficients decay and keep their signs") {
  const KernelSpec spec = KernelSpec::linear_decreasing(0.2);
  const KernelMoments m = compute_moments(spec, 1 << 16);
  const auto [b1, c1] = fourier_coefficients(spec, m, 1);
  const auto [b256, c256] = fourier_coefficients(spec, m, 256);
  CHECK(std::abs(b256) < std::abs(b1));  // Riemann-Lebesgue trend
  for (int k = 1; k <= 64; k *= 2) {
    const auto [b, c] = fourier_coefficients(spec, m, k);
    CHECK(c <= 1e-15);
    CHECK(b >= 0.0);
  }
}

TEST_CASE("sine transform is odd in k: explicit quadrature at -k") {
  const KernelSpec spec = KernelSpec::linear_decreasing(0.3);
  const KernelMoments m = compute_moments(spec, 1 << 16);
  for (int k : {1, 4, 9}) {
    // Test-side trapezoid of the defining integral with the sign flipped.
    const double omega = -kTwoPi * k;
    const int n = 1 << 15;
    double acc = 0.5 * (std::sin(0.0) * spec.eval(0.0) +
                        std::sin(omega * 0.3) * spec.eval(0.3));
    for (int i = 1; i < n; ++i) {
      const double s = 0.3 * i / n;
      acc += std::sin(omega * s) * spec.eval(s);
    }
    const double b_minus_k = acc * (0.3 / n) / m.nu;
    const auto [b, c] = fourier_coefficients(spec, m, k);
    // Tolerance limited by the test-side trapezoid, not the module.
    CHECK(b_minus_k == doctest::Approx(-b).epsilon(1e-6));
  }
}

TEST_CASE("tabulated and rescaled kernels run through the spectral pipeline") {
  // Admissible tabulated kernel: strictly decreasing samples.
  const KernelSpec tab = KernelSpec::tabulated(0.25, {4.0, 3.0, 2.0, 1.0, 0.5});
  CHECK(tab.admissible());
  const SpectralReport tab_rep = stability_constant(tab, 32);
  CHECK(tab_rep.alpha > 0.0);
  CHECK(tab_rep.tail_bound > 0.0);

  const KernelSpec quad =
      KernelSpec::rescaled(0.3, [](double u) { return 3.0 * (1.0 - u) * (1.0 - u); });
  CHECK(quad.admissible());
  const SpectralReport quad_rep = stability_constant(quad, 32);
  CHECK(quad_rep.alpha > 0.0);
  for (double c : quad_rep.c) CHECK(c <= 1e-12);
}

TEST_CASE("stability constant: damping minimum and tail witness") {
  SUBCASE("constant kernel at delta=0.5 has no damping at the resonant modes") {
    const SpectralReport rep = stability_constant(KernelSpec::constant(0.5), 16);
    CHECK(std::abs(rep.alpha) < 1e-10);
    // All even modes tie at zero damping; roundoff picks one of them.
    CHECK(rep.alpha_argmin % 2 == 0);
    CHECK(rep.tail_bound == doctest::Approx(0.0));
    CHECK(static_cast<int>(rep.b.size()) == 16);
    CHECK(static_cast<int>(rep.c.size()) == 16);
  }
  SUBCASE("linear kernel at delta=0.2 damps every mode") {
    const SpectralReport rep = stability_constant(KernelSpec::linear_decreasing(0.2), 256);
    CHECK(rep.alpha > 0.0);
    // Frozen from the analytic form (6/δ²)(1 − sin(0.4π)/(0.4π)), minimum at k=1.
    CHECK(rep.alpha == doctest::Approx(36.475990703901453).epsilon(1e-8));
    CHECK(rep.alpha_argmin == 1);
    CHECK(rep.tail_bound == doctest::Approx(150.0).epsilon(1e-8));
    CHECK_FALSE(rep.tail_below_min);
    // The min is bounded by the k=1 damping.
    CHECK(rep.alpha <= kTwoPi * rep.b[0] + 1e-12);
  }
  SUBCASE("k_max below 8 is rejected") {
    CHECK_THROWS_AS(stability_constant(KernelSpec::constant(0.5), 4),
                    std::invalid_argument);
  }
}

TEST_CASE("integration-by-parts lower bound holds for every computed mode") {
  // For w' ≤ 0 kernels: 2πk b(k) ≥ (w(0) − w(δ) + ∫cos(2πks) w'(s) ds)/ν > 0.
  const double delta = 0.2;
  const KernelSpec spec = KernelSpec::linear_decreasing(delta);
  const KernelMoments m = compute_moments(spec, 1 << 16);
  const double wslope = -2.0 / (delta * delta);
  for (int k = 1; k <= 256; ++k) {
    const double w = kTwoPi * k;
    const double cos_integral = wslope * std::sin(w * delta) / w;
    const double bound = (m.w0 - m.wdelta + cos_integral) / m.nu;
    const auto [b, c] = fourier_coefficients(spec, m, k);
    CHECK(bound > 0.0);
    CHECK(kTwoPi * k * b >= bound - 1e-6 * std::abs(bound));
  }
}

TEST_CASE("rescaled family keeps a delta-independent damping floor") {
  const SpectralReport coarse = stability_constant(KernelSpec::linear_decreasing(0.4), 64);
  const SpectralReport fine = stability_constant(KernelSpec::linear_decreasing(0.2), 64);
  CHECK(fine.alpha >= 0.5 * coarse.alpha);
  CHECK(coarse.alpha > 0.0);
}

TEST_CASE("linearized modes evolve by the exact exponential factor") {
  const KernelSpec spec = KernelSpec::linear_decreasing(0.2);

  SUBCASE("zero stays zero") {
    const std::vector<std::complex<double>> zero(5, {0.0, 0.0});
    const auto out = evolve_linearized(spec, 0.5, zero, 2.0);
    for (const auto& z : out) CHECK(std::abs(z) == 0.0);
  }

  SUBCASE("admissible kernels contract every mode") {
    for (std::size_t mode : {1u, 2u, 4u}) {
      std::vector<std::complex<double>> modes(6, {0.0, 0.0});
      modes[mode] = {0.3, -0.1};
      const auto out = evolve_linearized(spec, 0.4, modes, 1.0);
      CHECK(std::abs(out[mode]) < std::abs(modes[mode]));
    }
  }

  SUBCASE("constant kernel leaves the resonant mode oscillatory") {
    std::vector<std::complex<double>> modes(3, {0.0, 0.0});
    modes[2] = {0.2, 0.0};
    const auto out = evolve_linearized(KernelSpec::constant(0.5), 0.5, modes, 3.0);
    CHECK(std::abs(out[2]) == doctest::Approx(0.2).epsilon(1e-12));
  }

  SUBCASE("semigroup property") {
    std::vector<std::complex<double>> modes(5, {0.0, 0.0});
    modes[1] = {0.1, 0.2};
    modes[3] = {-0.05, 0.07};
    const auto direct = evolve_linearized(spec, 0.3, modes, 0.9);
    const auto chained = evolve_linearized(spec, 0.3, evolve_linearized(spec, 0.3, modes, 0.4), 0.5);
    for (std::size_t k = 0; k < modes.size(); ++k) {
      CHECK(std::abs(direct[k] - chained[k]) < 1e-12);
    }
  }

  SUBCASE("nonzero mean mode is rejected") {
    std::vector<std::complex<double>> modes(3, {0.0, 0.0});
    modes[0] = {1e-8, 0.0};
    CHECK_THROWS_AS(evolve_linearized(spec, 0.5, modes, 1.0), std::invalid_argument);
  }

  SUBCASE("decay rate equals nu*rho_bar*2pi*k*b(k)") {
    const KernelMoments m = compute_moments(spec, 1 << 16);
    const auto [b1, c1] = fourier_coefficients(spec, m, 1);
    std::vector<std::complex<double>> modes(2, {0.0, 0.0});
    modes[1] = {1.0, 0.0};
    const auto out = evolve_linearized(spec, 0.5, modes, 1.0);
    const double expected = std::exp(-m.nu * 0.5 * kTwoPi * b1);
    CHECK(std::abs(out[1]) == doctest::Approx(expected).epsilon(1e-12));
  }
}
