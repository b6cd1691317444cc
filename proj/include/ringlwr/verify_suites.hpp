#pragma once

#include <string>
#include <vector>

#include "ringlwr/kernel.hpp"

namespace ringlwr::verify {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst_margin = 0.0;  // min over cases of lhs - rhs (or bound slack)
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;

  bool passed() const { return failures == 0; }
};

/// Seeded inequality suites over random positive band-limited densities.
SuiteResult nonlocal_poincare_suite(const KernelSpec& spec, unsigned seed, int count);
SuiteResult nonlinear_poincare_suite(const KernelSpec& spec, unsigned seed, int count);

/// Rearrangement inequality over random sequences, every cyclic shift.
SuiteResult hardy_littlewood_suite(unsigned seed, int sequences, int length = 8);

/// δ=1 tent kernel: ∫∂ₓρ·Dρ dx must equal 6∫(ρ−ρ̄)² dx within 1e-6 relative.
SuiteResult local_identity_suite(unsigned seed, int count);

std::vector<SuiteResult> run_all(unsigned seed, int count);

}  // namespace ringlwr::verify
