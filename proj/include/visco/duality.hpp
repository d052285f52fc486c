#pragma once

#include <cstddef>
#include <limits>

#include "visco/models.hpp"

namespace visco {

// Residue relative-error estimates above this threshold raise the
// precision-loss flag on a conversion.
inline constexpr double kPrecisionLossThreshold = 1e-8;

// Numerical health of a reciprocal computation. Estimates accumulate, so a
// single instance can be threaded through a whole conversion pipeline.
struct ReciprocalStats {
  double max_residue_rel_err = 0.0;
  bool precision_loss() const noexcept { return max_residue_rel_err > kPrecisionLossThreshold; }
};

// Reciprocal of a nonzero complete Bernstein function as a Stieltjes triple.
//
// With F(p) = a + b p + sum_k w_k p/(p+s_k):
//   const term    lim_{p->inf} 1/F  = 0 if b > 0, else 1/(a + sum w)
//   1/p coeff     lim_{p->0}  p/F   = 0 if a > 0, else 1/(b + sum w_k/s_k)
//   atoms         at the negated zeros of the numerator, one per pole gap,
//                 with residue 1/F'(root) > 0.
//
// Throws ZeroFunction when F == 0, DomainError/NonFinite on an invalid
// triple, BracketFailure when a root bracket cannot be established.
StieltjesRep rational_reciprocal(const CbfRep& f, ReciprocalStats* stats = nullptr);

// Reciprocal of a nonzero Stieltjes function as a complete Bernstein triple.
// Runs through the same engine: p*S(p) is the CBF whose triple swaps the
// constant and 1/p coefficients of S, and multiplying the resulting
// Stieltjes decomposition of 1/(p S) back by p swaps them again.
CbfRep rational_reciprocal(const StieltjesRep& s, ReciprocalStats* stats = nullptr);

// Creep function dual to a LICM relaxation modulus: the reciprocal of the
// complete Bernstein function p f~(p) read back as a Stieltjes triple.
// The pure Newtonian case (f0 == 0, beta > 0) short-circuits to
// (offset 0, flow 1/beta, empty spectrum). Throws ZeroFunction when the
// modulus is identically zero.
CreepModel relaxation_to_creep(const RelaxationModel& m, ReciprocalStats* stats = nullptr);

// Relaxation modulus dual to a nonzero Bernstein creep function: the
// reciprocal of the Stieltjes function p h~(p) read back as a complete
// Bernstein triple. Realizes the limit laws beta = 0 when h(0) > 0 and
// beta = 1/h'(0) when h(0) = 0.
RelaxationModel creep_to_relaxation(const CreepModel& m, ReciprocalStats* stats = nullptr);

struct RoundtripReport {
  bool atom_count_match = false;
  double max_rel_discrepancy = std::numeric_limits<double>::infinity();
};

// Distance of creep_to_relaxation(relaxation_to_creep(m)) from m: max
// relative discrepancy across beta, f_inf, and atoms matched in sorted
// order. An atom-count mismatch reports infinite discrepancy.
RoundtripReport roundtrip_check(const RelaxationModel& m);

struct InterlacingSummary {
  std::size_t pole_count = 0;
  std::size_t atom_count = 0;
  bool count_ok = false;
  bool alternation_ok = false;
  bool ok() const noexcept { return count_ok && alternation_ok; }
};

// Independent verification that the reciprocal's atoms sit strictly inside
// the admissible gaps of the input pole set: (0, s_1) iff a > 0, each
// (s_k, s_{k+1}), and (s_n, inf) iff b > 0; for an empty input spectrum the
// only admissible gap is (0, inf) when both a and b are positive.
InterlacingSummary check_interlacing(const CbfRep& input, const StieltjesRep& reciprocal);

}  // namespace visco
