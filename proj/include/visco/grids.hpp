#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "visco/errors.hpp"

namespace visco {

inline std::vector<double> linear_spaced(double lo, double hi, std::size_t n) {
  if (n == 0) throw DomainError("grid needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("grid endpoints must be finite");
  if (n == 1) return {lo};
  if (!(hi > lo)) throw DomainError("grid needs hi > lo");
  std::vector<double> g(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + static_cast<double>(i) * h;
  g.back() = hi;
  return g;
}

inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0)) throw DomainError("log-spaced grid needs lo > 0");
  if (n == 0) throw DomainError("grid needs at least one point");
  if (n == 1) return {lo};
  if (!(hi > lo)) throw DomainError("grid needs hi > lo");
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  const double h = (lhi - llo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(llo + static_cast<double>(i) * h);
  g.front() = lo;
  g.back() = hi;
  return g;
}

// {0, step, 2 step, ...} covering [0, t_max].
inline std::vector<double> uniform_grid(double t_max, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw GridError("step must be positive and finite");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw GridError("t_max must be nonnegative");
  const auto count = static_cast<std::size_t>(std::floor(t_max / step + 0.5)) + 1;
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) g[i] = static_cast<double>(i) * step;
  return g;
}

// Common spacing of a uniform grid; GridError when the grid has fewer than
// two points or deviates from uniformity beyond rounding slack.
inline double uniform_step_or_throw(std::span<const double> t) {
  if (t.size() < 2) throw GridError("grid needs at least two points");
  const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(h > 0.0)) throw GridError("grid must be strictly increasing");
  const double slack = 1e-9 * (std::abs(t.back() - t.front()) + std::abs(t.front()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double want = t.front() + static_cast<double>(i) * h;
    if (std::abs(t[i] - want) > slack) throw GridError("grid is not uniform");
  }
  return h;
}

}  // namespace visco
