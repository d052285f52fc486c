#include "visco/checks.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "visco/errors.hpp"
#include "visco/grids.hpp"

namespace visco {
namespace {

// Both checks walk the forward-difference triangle once and track the
// smallest signed slack. For complete monotonicity every order-n constraint
// is (-1)^n D^n v >= 0; the Bernstein variant keeps order 0 as v >= 0 and
// flips the sign of every higher order.
CheckReport difference_check(std::span<const double> t, std::span<const double> values,
                             int max_order, bool bernstein_sense) {
  if (max_order < 1 || max_order > 8) throw DomainError("difference order must lie in [1, 8]");
  if (values.size() != t.size()) throw GridError("sample count must match the grid");
  if (t.size() < static_cast<std::size_t>(max_order) + 1)
    throw GridError("grid too short for the requested difference order");
  uniform_step_or_throw(t);

  double vmax = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw NonFinite("samples must be finite");
    vmax = std::max(vmax, std::abs(v));
  }

  CheckReport rep;
  rep.tolerance = 1e-9 * vmax;

  double worst = std::numeric_limits<double>::infinity();
  auto consider = [&](double slack, int order, std::size_t index) {
    if (slack < worst) {
      worst = slack;
      rep.worst_order = order;
      rep.worst_index = index;
    }
  };

  std::vector<double> d(values.begin(), values.end());
  for (std::size_t i = 0; i < d.size(); ++i) consider(d[i], 0, i);

  std::size_t len = d.size();
  for (int n = 1; n <= max_order; ++n) {
    --len;
    for (std::size_t i = 0; i < len; ++i) d[i] = d[i + 1] - d[i];
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    if (bernstein_sense) sign = -sign;
    for (std::size_t i = 0; i < len; ++i) consider(sign * d[i], n, i);
  }

  rep.worst_margin = worst;
  rep.pass = worst >= -rep.tolerance;
  return rep;
}

}  // namespace

CheckReport cm_check(std::span<const double> t, std::span<const double> values, int max_order) {
  return difference_check(t, values, max_order, false);
}

CheckReport bernstein_check(std::span<const double> t, std::span<const double> values,
                            int max_order) {
  return difference_check(t, values, max_order, true);
}

}  // namespace visco
