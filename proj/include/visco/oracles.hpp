#pragma once

#include <span>
#include <vector>

#include "visco/models.hpp"

namespace visco {

// max over the grid of |p^2 f~(p) h~(p) - 1|, the transform-domain duality
// residual; zero exactly when the pair is dual. Throws DomainError on an
// empty grid or nonpositive grid points.
double duality_residual(const RelaxationModel& relax, const CreepModel& creep,
                        std::span<const double> p_grid);

// Time-domain operator identity R*C = I^2: computes
//
//     (R*C)(t) = beta C(t) + integral_0^t f0(s) C(t-s) ds
//
// by trapezoid quadrature on the given grid (the delta term acts exactly)
// and returns max over the grid of |(R*C)(t) - t| / max(t, step). The grid
// must start at 0 and be uniform with the given step; GridError otherwise.
double convolution_identity_error(const RelaxationModel& relax, const CreepModel& creep,
                                  std::span<const double> t_grid, double step);

// Stress history for a sampled strain rate on a uniform grid t_i = i*step:
//
//     sigma(t_i) = beta eps_dot(t_i) + (f0 * eps_dot)(t_i)
//
// with the hereditary integral by trapezoid quadrature. Throws GridError on
// a nonpositive step or empty signal.
std::vector<double> stress_response(const RelaxationModel& relax,
                                    std::span<const double> strain_rate, double step);

}  // namespace visco
