#include "visco/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "visco/errors.hpp"
#include "visco/grids.hpp"

namespace visco {

double duality_residual(const RelaxationModel& relax, const CreepModel& creep,
                        std::span<const double> p_grid) {
  if (p_grid.empty()) throw DomainError("residual needs a nonempty transform grid");
  double worst = 0.0;
  for (double p : p_grid) {
    if (!std::isfinite(p) || !(p > 0.0))
      throw DomainError("transform grid points must be positive and finite");
    const double res = p * p * laplace_relaxation(relax, p) * laplace_creep(creep, p) - 1.0;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

double convolution_identity_error(const RelaxationModel& relax, const CreepModel& creep,
                                  std::span<const double> t_grid, double step) {
  if (t_grid.size() < 2) throw GridError("convolution grid needs at least two points");
  if (t_grid.front() != 0.0) throw GridError("convolution grid must start at t = 0");
  const double h = uniform_step_or_throw(t_grid);
  if (std::abs(h - step) > 1e-9 * step)
    throw GridError("grid spacing does not match the declared step");

  const std::size_t n = t_grid.size();
  std::vector<double> f0(n), c(n);
  f0[0] = relax.value_at_zero();
  c[0] = eval_creep(creep, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    f0[i] = eval_relaxation(relax, t_grid[i]);
    c[i] = eval_creep(creep, t_grid[i]);
  }

  const double beta = relax.newtonian();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double integral = 0.0;
    if (i > 0) {
      double sum = 0.5 * (f0[0] * c[i] + f0[i] * c[0]);
      for (std::size_t j = 1; j < i; ++j) sum += f0[j] * c[i - j];
      integral = sum * step;
    }
    const double conv = beta * c[i] + integral;
    worst = std::max(worst, std::abs(conv - t_grid[i]) / std::max(t_grid[i], step));
  }
  return worst;
}

std::vector<double> stress_response(const RelaxationModel& relax,
                                    std::span<const double> strain_rate, double step) {
  if (!std::isfinite(step) || !(step > 0.0)) throw GridError("step must be positive and finite");
  if (strain_rate.empty()) throw GridError("strain-rate history must be nonempty");
  for (double e : strain_rate) {
    if (!std::isfinite(e)) throw NonFinite("strain-rate samples must be finite");
  }

  const std::size_t n = strain_rate.size();
  std::vector<double> f0(n);
  f0[0] = relax.value_at_zero();
  for (std::size_t i = 1; i < n; ++i) f0[i] = eval_relaxation(relax, step * static_cast<double>(i));

  const double beta = relax.newtonian();
  std::vector<double> sigma(n);
  for (std::size_t i = 0; i < n; ++i) {
    double integral = 0.0;
    if (i > 0) {
      double sum = 0.5 * (f0[0] * strain_rate[i] + f0[i] * strain_rate[0]);
      for (std::size_t j = 1; j < i; ++j) sum += f0[j] * strain_rate[i - j];
      integral = sum * step;
    }
    sigma[i] = beta * strain_rate[i] + integral;
  }
  return sigma;
}

}  // namespace visco
