#pragma once

#include <cstddef>
#include <span>

namespace visco {

// Outcome of a finite-difference monotonicity check. Every constraint is
// expressed as a signed slack; pass means the smallest slack stays above
// -tolerance. worst_order / worst_index locate the smallest slack.
struct CheckReport {
  bool pass = false;
  double worst_margin = 0.0;
  int worst_order = 0;
  std::size_t worst_index = 0;
  double tolerance = 0.0;  // 1e-9 * max|value|
};

// Complete monotonicity of sampled values on a uniform t-grid: requires
// (-1)^n Delta^n v >= -tolerance for n = 0..max_order at every admissible
// grid position. max_order in [1, 8]; needs at least max_order+1 samples.
// Throws GridError on a non-uniform or too-short grid.
CheckReport cm_check(std::span<const double> t, std::span<const double> values, int max_order);

// Bernstein property of sampled values: v >= -tolerance and
// (-1)^n Delta^n v <= +tolerance for n = 1..max_order. Same grid contract.
CheckReport bernstein_check(std::span<const double> t, std::span<const double> values,
                            int max_order);

}  // namespace visco
