#include "visco/laplace_inversion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "visco/errors.hpp"

namespace visco {
namespace {

long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= static_cast<long double>(i);
  return f;
}

long double ipow(int base, int exp) {
  long double r = 1.0L;
  for (int i = 0; i < exp; ++i) r *= static_cast<long double>(base);
  return r;
}

}  // namespace

std::vector<long double> stehfest_weights(int n_terms) {
  if (n_terms < 4 || n_terms > 20 || n_terms % 2 != 0)
    throw DomainError("term count must be even and within [4, 20]");

  const int half = n_terms / 2;
  std::vector<long double> weights(static_cast<std::size_t>(n_terms));
  for (int k = 1; k <= n_terms; ++k) {
    long double sum = 0.0L;
    const int j_lo = (k + 1) / 2;
    const int j_hi = std::min(k, half);
    for (int j = j_lo; j <= j_hi; ++j) {
      sum += ipow(j, half) * factorial(2 * j) /
             (factorial(half - j) * factorial(j) * factorial(j - 1) * factorial(k - j) *
              factorial(2 * j - k));
    }
    const long double sign = ((half + k) % 2 == 0) ? 1.0L : -1.0L;
    weights[static_cast<std::size_t>(k - 1)] = sign * sum;
  }
  return weights;
}

double gaver_stehfest(const TransformEvaluator& transform, double t, int n_terms) {
  if (!std::isfinite(t) || !(t > 0.0))
    throw DomainError("inversion time must be positive and finite");
  const std::vector<long double> weights = stehfest_weights(n_terms);

  const long double ln2_over_t = std::numbers::ln2_v<long double> / static_cast<long double>(t);
  // The weights alternate with large magnitude; the cancellation is the
  // method's nature, but carrying nodes, samples, and the sum in extended
  // precision keeps the arithmetic from adding to it.
  long double acc = 0.0L;
  for (int k = 1; k <= n_terms; ++k) {
    const long double node = static_cast<long double>(k) * ln2_over_t;
    acc += weights[static_cast<std::size_t>(k - 1)] * transform(node);
  }
  return static_cast<double>(ln2_over_t * acc);
}

double numeric_dual(const TransformEvaluator& relaxation_transform, double t, int n_terms) {
  auto creep_transform = [&relaxation_transform](long double p) {
    const long double r = relaxation_transform(p);
    if (!std::isfinite(r) || !(r > 0.0L))
      throw SingularTransform("relaxation transform must be positive and finite on (0, inf)");
    return 1.0L / (p * p * r);
  };
  return gaver_stehfest(creep_transform, t, n_terms);
}

}  // namespace visco
