#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ringlwr/kernel.hpp"

namespace ringlwr {

/**
 * Fourier picture of the look-ahead gradient on the unit ring. Mode e^{2πikx}
 * maps to (i·b(k) + c(k))·e^{2πikx} with
 *
 *   b(k) = (1/ν) ∫₀^δ sin(2πks)  w_δ(s) ds,
 *   c(k) = (1/ν) ∫₀^δ (cos(2πks) − 1) w_δ(s) ds ≤ 0,
 *
 * so the composed ring operator ∂ₓ∘D has eigenvalues −2πk·b(k) + 2πik·c(k).
 * The damping constant alpha = min_k 2πk·b(k) is strictly positive exactly
 * when the kernel is non-increasing and non-constant.
 */
struct SpectralReport {
  int k_max;
  std::vector<double> b;  // k = 1..k_max
  std::vector<double> c;
  std::vector<std::complex<double>> eigenvalues;  // -2πk b(k) + 2πik c(k)
  double alpha;                                   // min over computed k of 2πk b(k)
  int alpha_argmin;
  double tail_bound;     // (w(0) - w(δ))/ν, certifies the k→∞ tail
  bool tail_below_min;   // true when the tail witness undercuts the discrete min
};

/// (b(k), c(k)) by oscillation-resolving composite Simpson quadrature.
std::pair<double, double> fourier_coefficients(const KernelSpec& spec,
                                               const KernelMoments& moments, int k);

/// Brute-force minimum of 2πk·b(k) over k = 1..k_max (k_max ≥ 8) plus the
/// analytic tail witness. Throws std::logic_error if an admissible
/// (non-increasing, non-constant) kernel yields alpha ≤ 0, which would
/// contradict the spectral lower bound.
SpectralReport stability_constant(const KernelSpec& spec, int k_max = 256);

/// Evolves mean-zero Fourier modes of the linearization around rho_bar:
/// mode k multiplies by exp(t·(−2πik(1−2ρ̄) + ν ρ̄(−2πk b(k) + 2πik c(k)))).
/// initial_modes[0] is the mean mode and must be exactly zero.
std::vector<std::complex<double>> evolve_linearized(
    const KernelSpec& spec, double rho_bar,
    const std::vector<std::complex<double>>& initial_modes, double t);

}  // namespace ringlwr
