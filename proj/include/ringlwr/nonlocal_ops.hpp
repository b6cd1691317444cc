#pragma once

#include <complex>
#include <vector>

#include "ringlwr/grid.hpp"
#include "ringlwr/kernel.hpp"

namespace ringlwr {

/**
 * Grid-aligned discretization of the look-ahead average: trapezoid weights at
 * offsets s_m = m·dx, m = 0..M with M = ⌊δ/dx⌋, renormalized so Σw_m = 1.
 * Renormalization makes the discrete operator annihilate constants exactly;
 * any partial cell beyond M·dx is dropped (an O(dx) effect when δ is not a
 * multiple of dx). Constant kernels take a prefix-sum path that agrees with
 * the direct sum to better than 1e-12.
 */
class NonlocalEvaluator {
 public:
  NonlocalEvaluator(const KernelSpec& spec, const PeriodicGrid& grid);

  /// out[j] = Σ_m w_m · in[(j+m) mod N].
  void apply(const std::vector<double>& in, std::vector<double>& out) const;
  /// Direct summation regardless of shape (reference path for the fast path).
  void apply_direct(const std::vector<double>& in, std::vector<double>& out) const;

  int support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  int support_;                  // M
  std::vector<double> weights_;  // size M+1
  bool fast_constant_;
  mutable std::vector<double> extended_;     // unwrapped ring scratch
  mutable std::vector<long double> prefix_;  // scratch for the constant path
};

/// W[ρ](x_j): kernel-weighted look-ahead average. Requires δ ≥ dx.
DensityField nonlocal_average(const DensityField& rho, const KernelSpec& spec);

/// D_x^δ ρ = (W[ρ] − ρ·mass)/ν with the same discrete weights as W (mass = 1).
DensityField nonlocal_gradient(const DensityField& rho, const KernelSpec& spec,
                               const KernelMoments& moments);

/// ‖ρ − ρ̄‖_L2 over the unit ring.
double l2_distance_to_mean(const DensityField& rho);

/// ρ̂(k) = (1/N) Σ_j ρ_j e^{-2πik x_j}.
std::complex<double> fourier_mode(const DensityField& rho, int k);

}  // namespace ringlwr
