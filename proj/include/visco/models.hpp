#pragma once

#include <string>

#include "visco/spectrum.hpp"

namespace visco {

// Locally integrable completely monotone relaxation modulus
//
//     f(t) = beta * u(t) + f0(t),      f0(t) = f_inf + sum_k mu_k e^{-s_k t}
//
// where u is the identity convolution operator (delta-like) and mu is the
// relaxation spectrum. beta is stored as a scalar coefficient and never
// evaluated pointwise; eval_relaxation returns f0 only. The equilibrium
// constant f_inf is the measure's atom at rate zero, kept as an explicit
// field so the solid (f_inf > 0) / fluid (f_inf = 0) dichotomy is exact.
class RelaxationModel {
 public:
  RelaxationModel(double newtonian, double equilibrium, DiscreteSpectrum spectrum = {});

  double newtonian() const noexcept { return newtonian_; }      // beta
  double equilibrium() const noexcept { return equilibrium_; }  // f_inf
  const DiscreteSpectrum& spectrum() const noexcept { return spectrum_; }

  bool decaying_part_is_zero() const noexcept;  // f0 == 0
  bool is_zero() const noexcept;                // f == 0, beta included

  // f0(0+) = f_inf + sum mu_k; finite and, for a nonzero f0, positive.
  double value_at_zero() const noexcept;

 private:
  double newtonian_ = 0.0;
  double equilibrium_ = 0.0;
  DiscreteSpectrum spectrum_;
};

// Bernstein-class creep function
//
//     h(t) = a + b t + sum_j (nu_j / r_j) (1 - e^{-r_j t})
//
// with offset a = h(0), Newtonian flow slope b, and retardation spectrum nu.
// h is nonnegative, nondecreasing and concave; h' is completely monotone.
class CreepModel {
 public:
  CreepModel(double offset, double flow, DiscreteSpectrum spectrum = {});

  double offset() const noexcept { return offset_; }  // a = h(0)
  double flow() const noexcept { return flow_; }      // b
  const DiscreteSpectrum& spectrum() const noexcept { return spectrum_; }

  bool is_zero() const noexcept;

  // h'(0) = b + sum nu_j
  double slope_at_zero() const noexcept;

 private:
  double offset_ = 0.0;
  double flow_ = 0.0;
  DiscreteSpectrum spectrum_;
};

// Stieltjes triple:  S(p) = a + b/p + sum_j nu_j / (p + r_j)
struct StieltjesRep {
  double const_term = 0.0;    // a
  double pole_at_zero = 0.0;  // b, coefficient of 1/p
  DiscreteSpectrum spectrum;

  double eval(double p) const;  // p > 0
  bool is_zero() const noexcept;
};

// Complete Bernstein triple:  F(p) = a + b p + sum_k w_k p / (p + s_k)
struct CbfRep {
  double const_term = 0.0;  // a
  double slope = 0.0;       // b, coefficient of p
  DiscreteSpectrum spectrum;

  double eval(double p) const;  // p > 0
  bool is_zero() const noexcept;
};

// A limit that is either a finite nonnegative real or +infinity, kept as an
// explicit marker rather than a sentinel number.
class LimitValue {
 public:
  static LimitValue finite(double v) { return LimitValue(v, true); }
  static LimitValue infinite() { return LimitValue(0.0, false); }

  bool is_finite() const noexcept { return finite_; }
  double value() const;  // throws DomainError when infinite

  friend bool operator==(const LimitValue& x, const LimitValue& y) {
    return x.finite_ == y.finite_ && (!x.finite_ || x.value_ == y.value_);
  }

 private:
  LimitValue(double v, bool finite) : value_(v), finite_(finite) {}
  double value_;
  bool finite_;
};

// "inf" or a 17-significant-digit decimal rendering.
std::string to_string(const LimitValue& v);

// The six limit values tied together by duality.
struct LimitReport {
  LimitValue f0_at_zero = LimitValue::finite(0.0);       // f0(0+)
  double f_inf = 0.0;                                    // lim_{t->inf} f0
  double h_at_zero = 0.0;                                // h(0) = a
  LimitValue h_slope_at_zero = LimitValue::finite(0.0);  // h'(0+)
  LimitValue h_at_inf = LimitValue::finite(0.0);         // lim_{t->inf} h
  double flow_b = 0.0;                                   // creep flow slope
};

// f0(t) = f_inf + sum mu_k e^{-s_k t}. Requires t > 0; the beta*u delta
// term never evaluates pointwise (use value_at_zero() for the t->0 limit).
double eval_relaxation(const RelaxationModel& m, double t);

// h(t) = a + b t + sum (nu_j/r_j)(1 - e^{-r_j t}). Requires t >= 0.
double eval_creep(const CreepModel& m, double t);

// Exact Laplace transform of the full relaxation modulus,
//     f~(p) = beta + f_inf/p + sum mu_k / (p + s_k),    p > 0.
double laplace_relaxation(const RelaxationModel& m, double p);

// Exact Laplace transform of the creep function,
//     h~(p) = a/p + b/p^2 + sum nu_j / (p (p + r_j)),   p > 0.
double laplace_creep(const CreepModel& m, double p);

// Closed-form limits of a relaxation/creep pair:
//   f0(0+) = f_inf + sum mu,  h'(0) = b + sum nu,
//   h(inf) = a + sum nu_j/r_j, or +inf when the flow slope is positive.
LimitReport limits_report(const RelaxationModel& relax, const CreepModel& creep);

}  // namespace visco
