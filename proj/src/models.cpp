#include "visco/models.hpp"

#include <cmath>
#include <utility>

#include "visco/errors.hpp"
#include "visco/number_format.hpp"

namespace visco {

RelaxationModel::RelaxationModel(double newtonian, double equilibrium, DiscreteSpectrum spectrum)
    : newtonian_(newtonian), equilibrium_(equilibrium), spectrum_(std::move(spectrum)) {
  if (!std::isfinite(newtonian_) || !std::isfinite(equilibrium_))
    throw NonFinite("relaxation coefficients must be finite");
  if (newtonian_ < 0.0) throw DomainError("newtonian coefficient must be nonnegative");
  if (equilibrium_ < 0.0) throw DomainError("equilibrium modulus must be nonnegative");
}

bool RelaxationModel::decaying_part_is_zero() const noexcept {
  return equilibrium_ == 0.0 && spectrum_.empty();
}

bool RelaxationModel::is_zero() const noexcept {
  return newtonian_ == 0.0 && decaying_part_is_zero();
}

double RelaxationModel::value_at_zero() const noexcept {
  return equilibrium_ + spectrum_.total_mass();
}

CreepModel::CreepModel(double offset, double flow, DiscreteSpectrum spectrum)
    : offset_(offset), flow_(flow), spectrum_(std::move(spectrum)) {
  if (!std::isfinite(offset_) || !std::isfinite(flow_))
    throw NonFinite("creep coefficients must be finite");
  if (offset_ < 0.0) throw DomainError("creep offset must be nonnegative");
  if (flow_ < 0.0) throw DomainError("creep flow slope must be nonnegative");
}

bool CreepModel::is_zero() const noexcept {
  return offset_ == 0.0 && flow_ == 0.0 && spectrum_.empty();
}

double CreepModel::slope_at_zero() const noexcept {
  return flow_ + spectrum_.total_mass();
}

double StieltjesRep::eval(double p) const {
  if (!(p > 0.0)) throw DomainError("Stieltjes evaluation needs p > 0");
  double v = const_term + pole_at_zero / p;
  for (const auto& a : spectrum.atoms()) v += a.weight / (p + a.rate);
  return v;
}

bool StieltjesRep::is_zero() const noexcept {
  return const_term == 0.0 && pole_at_zero == 0.0 && spectrum.empty();
}

double CbfRep::eval(double p) const {
  if (!(p > 0.0)) throw DomainError("complete Bernstein evaluation needs p > 0");
  double v = const_term + slope * p;
  for (const auto& a : spectrum.atoms()) v += a.weight * p / (p + a.rate);
  return v;
}

bool CbfRep::is_zero() const noexcept {
  return const_term == 0.0 && slope == 0.0 && spectrum.empty();
}

double LimitValue::value() const {
  if (!finite_) throw DomainError("limit is infinite");
  return value_;
}

std::string to_string(const LimitValue& v) {
  return v.is_finite() ? format_double17(v.value()) : std::string("inf");
}

double eval_relaxation(const RelaxationModel& m, double t) {
  if (!(t > 0.0)) throw DomainError("relaxation modulus is evaluated for t > 0 only");
  double v = m.equilibrium();
  for (const auto& a : m.spectrum().atoms()) v += a.weight * std::exp(-a.rate * t);
  return v;
}

double eval_creep(const CreepModel& m, double t) {
  if (!(t >= 0.0)) throw DomainError("creep function is evaluated for t >= 0");
  double v = m.offset() + m.flow() * t;
  // 1 - e^{-rt} via expm1 keeps small-t values from cancelling.
  for (const auto& a : m.spectrum().atoms()) v += a.weight / a.rate * (-std::expm1(-a.rate * t));
  return v;
}

double laplace_relaxation(const RelaxationModel& m, double p) {
  if (!(p > 0.0)) throw DomainError("transform is evaluated for p > 0");
  double v = m.newtonian() + m.equilibrium() / p;
  for (const auto& a : m.spectrum().atoms()) v += a.weight / (p + a.rate);
  return v;
}

double laplace_creep(const CreepModel& m, double p) {
  if (!(p > 0.0)) throw DomainError("transform is evaluated for p > 0");
  double v = m.offset() / p + m.flow() / (p * p);
  for (const auto& a : m.spectrum().atoms()) v += a.weight / (p * (p + a.rate));
  return v;
}

LimitReport limits_report(const RelaxationModel& relax, const CreepModel& creep) {
  LimitReport rep;
  rep.f0_at_zero = LimitValue::finite(relax.value_at_zero());
  rep.f_inf = relax.equilibrium();
  rep.h_at_zero = creep.offset();
  rep.h_slope_at_zero = LimitValue::finite(creep.slope_at_zero());
  rep.h_at_inf = creep.flow() > 0.0
                     ? LimitValue::infinite()
                     : LimitValue::finite(creep.offset() + creep.spectrum().mass_over_rate());
  rep.flow_b = creep.flow();
  return rep;
}

}  // namespace visco
