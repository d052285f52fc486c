#include "visco/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "visco/errors.hpp"

namespace visco {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long double kEpsL = std::numeric_limits<long double>::epsilon();

// Root work runs in long double. A root that hugs a pole at distance d keeps
// only ~d/|s| of the working precision in the pole-distance cancellation, and
// the residue squares that loss; the extra mantissa bits keep residues of
// tightly clustered spectra accurate to better than 1e-10 where plain double
// bottoms out near 1e-7.

// Evaluation stays in the summed, factored form throughout; expanding the
// numerator polynomial would square the condition number for widely spread
// rates. Valid at any real p away from the poles -s_k.
long double cbf_eval(const CbfRep& f, long double p) {
  long double v = f.const_term + static_cast<long double>(f.slope) * p;
  for (const auto& a : f.spectrum.atoms()) v += a.weight * p / (p + a.rate);
  return v;
}

// F'(p) = b + sum w_k s_k / (p + s_k)^2, strictly positive off the poles.
long double cbf_deriv(const CbfRep& f, long double p) {
  long double v = f.slope;
  for (const auto& a : f.spectrum.atoms()) {
    const long double d = p + a.rate;
    v += static_cast<long double>(a.weight) * a.rate / (d * d);
  }
  return v;
}

// Bound on |F''| at p, used only to estimate how root error propagates into
// the residue.
long double cbf_second_bound(const CbfRep& f, long double p) {
  long double v = 0.0L;
  for (const auto& a : f.spectrum.atoms()) {
    const long double d = std::abs(p + a.rate);
    v += 2.0L * a.weight * a.rate / (d * d * d);
  }
  return v;
}

void require_valid(const CbfRep& f) {
  if (!std::isfinite(f.const_term) || !std::isfinite(f.slope))
    throw NonFinite("complete Bernstein coefficients must be finite");
  if (f.const_term < 0.0 || f.slope < 0.0)
    throw DomainError("complete Bernstein coefficients must be nonnegative");
}

void require_valid(const StieltjesRep& s) {
  if (!std::isfinite(s.const_term) || !std::isfinite(s.pole_at_zero))
    throw NonFinite("Stieltjes coefficients must be finite");
  if (s.const_term < 0.0 || s.pole_at_zero < 0.0)
    throw DomainError("Stieltjes coefficients must be nonnegative");
}

// Locates the unique zero of F in the open gap (lo, hi). The endpoints are
// virtual: F tends to -inf at lo+ and to +inf at hi- (or is known positive
// at hi), so they are never evaluated. Bisection runs until the bracket
// collapses to adjacent representable values, which keeps the monotone sign
// invariant without any derivative stopping rule.
long double find_gap_root(const CbfRep& f, long double lo, long double hi) {
  long double x_lo = lo, x_hi = hi;
  for (int it = 0; it < 200; ++it) {
    const long double m = 0.5L * (x_lo + x_hi);
    if (!(m > x_lo && m < x_hi)) break;  // gap exhausted at working resolution
    const long double fm = cbf_eval(f, m);
    if (fm == 0.0L) return m;
    if (fm < 0.0L)
      x_lo = m;
    else
      x_hi = m;
  }
  return 0.5L * (x_lo + x_hi);
}

void add_root(const CbfRep& f, long double lo, long double hi, std::vector<SpectrumAtom>& out,
              ReciprocalStats* stats) {
  const long double x = find_gap_root(f, lo, hi);
  if (!std::isfinite(x) || !(x < 0.0L) || !(x > lo) || !(x < hi))
    throw BracketFailure("root escaped its pole gap");
  const long double dfx = cbf_deriv(f, x);
  if (dfx <= 0.0L) throw BracketFailure("derivative lost positivity at a located root");
  out.push_back({static_cast<double>(-x), static_cast<double>(1.0L / dfx)});

  if (stats != nullptr) {
    double rel = std::numeric_limits<double>::infinity();
    const long double fx = cbf_eval(f, x);
    if (std::isfinite(dfx) && std::isfinite(fx)) {
      const long double err_x = std::max(std::abs(fx) / dfx, 4.0L * kEpsL * std::abs(x));
      rel = static_cast<double>(cbf_second_bound(f, x) / dfx * err_x) + 16.0 * kEps;
    }
    if (!(rel >= 0.0)) rel = std::numeric_limits<double>::infinity();
    stats->max_residue_rel_err = std::max(stats->max_residue_rel_err, rel);
  }
}

}  // namespace

StieltjesRep rational_reciprocal(const CbfRep& f, ReciprocalStats* stats) {
  require_valid(f);
  if (f.is_zero()) throw ZeroFunction("the zero function has no reciprocal");

  StieltjesRep out;
  out.const_term = f.slope > 0.0 ? 0.0 : 1.0 / (f.const_term + f.spectrum.total_mass());
  out.pole_at_zero = f.const_term > 0.0 ? 0.0 : 1.0 / (f.slope + f.spectrum.mass_over_rate());

  const auto& poles = f.spectrum.atoms();
  std::vector<SpectrumAtom> atoms;
  atoms.reserve(poles.size() + 1);

  if (poles.empty()) {
    // 1/(a + b p) has the single atom b^-1 / (p + a/b) when both terms live.
    if (f.const_term > 0.0 && f.slope > 0.0)
      atoms.push_back({f.const_term / f.slope, 1.0 / f.slope});
  } else {
    if (f.const_term > 0.0) add_root(f, -poles.front().rate, 0.0, atoms, stats);
    for (std::size_t k = 0; k + 1 < poles.size(); ++k)
      add_root(f, -poles[k + 1].rate, -poles[k].rate, atoms, stats);
    if (f.slope > 0.0) {
      // Beyond the last pole every spectral term is within a factor 2 of its
      // mass, so F(L) <= a + 2*mass + b L gives an analytic starting point.
      double left = -(2.0 * poles.back().rate + 1.0);
      const double jump = -(f.const_term + 2.0 * f.spectrum.total_mass() + 1.0) / f.slope;
      if (std::isfinite(jump)) left = std::min(left, jump);
      int guard = 0;
      while (!(cbf_eval(f, left) < 0.0)) {
        left *= 2.0;
        if (++guard > 1100 || !std::isfinite(left))
          throw BracketFailure("no sign change beyond the largest pole");
      }
      add_root(f, left, -poles.back().rate, atoms, stats);
    }
  }

  out.spectrum = DiscreteSpectrum(std::move(atoms));
  return out;
}

CbfRep rational_reciprocal(const StieltjesRep& s, ReciprocalStats* stats) {
  require_valid(s);
  if (s.is_zero()) throw ZeroFunction("the zero function has no reciprocal");

  // p S(p) is complete Bernstein with the constant and 1/p coefficients of S
  // exchanged; dividing the reciprocal's Stieltjes triple by 1/p (that is,
  // multiplying by p) exchanges them back.
  CbfRep lifted;
  lifted.const_term = s.pole_at_zero;
  lifted.slope = s.const_term;
  lifted.spectrum = s.spectrum;

  const StieltjesRep inv = rational_reciprocal(lifted, stats);

  CbfRep out;
  out.const_term = inv.pole_at_zero;
  out.slope = inv.const_term;
  out.spectrum = inv.spectrum;
  return out;
}

CreepModel relaxation_to_creep(const RelaxationModel& m, ReciprocalStats* stats) {
  if (m.is_zero()) throw ZeroFunction("the zero relaxation modulus has no creep dual");
  if (m.decaying_part_is_zero()) return CreepModel(0.0, 1.0 / m.newtonian());

  CbfRep f;  // p f~(p)
  f.const_term = m.equilibrium();
  f.slope = m.newtonian();
  f.spectrum = m.spectrum();

  const StieltjesRep inv = rational_reciprocal(f, stats);
  return CreepModel(inv.const_term, inv.pole_at_zero, inv.spectrum);
}

RelaxationModel creep_to_relaxation(const CreepModel& m, ReciprocalStats* stats) {
  if (m.is_zero()) throw ZeroFunction("the zero creep function has no relaxation dual");

  StieltjesRep h;  // p h~(p)
  h.const_term = m.offset();
  h.pole_at_zero = m.flow();
  h.spectrum = m.spectrum();

  const CbfRep inv = rational_reciprocal(h, stats);
  return RelaxationModel(inv.slope, inv.const_term, inv.spectrum);
}

RoundtripReport roundtrip_check(const RelaxationModel& m) {
  const RelaxationModel back = creep_to_relaxation(relaxation_to_creep(m));

  RoundtripReport rep;
  const auto& want = m.spectrum().atoms();
  const auto& got = back.spectrum().atoms();
  rep.atom_count_match = want.size() == got.size();
  if (!rep.atom_count_match) return rep;

  auto rel = [](double w, double g) {
    const double denom = std::max(std::abs(w), std::abs(g));
    return denom == 0.0 ? 0.0 : std::abs(w - g) / denom;
  };
  double worst = std::max(rel(m.newtonian(), back.newtonian()),
                          rel(m.equilibrium(), back.equilibrium()));
  for (std::size_t i = 0; i < want.size(); ++i) {
    worst = std::max(worst, rel(want[i].rate, got[i].rate));
    worst = std::max(worst, rel(want[i].weight, got[i].weight));
  }
  rep.max_rel_discrepancy = worst;
  return rep;
}

InterlacingSummary check_interlacing(const CbfRep& input, const StieltjesRep& reciprocal) {
  InterlacingSummary sum;
  const auto& poles = input.spectrum.atoms();
  const auto& atoms = reciprocal.spectrum.atoms();
  sum.pole_count = poles.size();
  sum.atom_count = atoms.size();

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, double>> gaps;
  if (poles.empty()) {
    if (input.const_term > 0.0 && input.slope > 0.0) gaps.emplace_back(0.0, inf);
  } else {
    if (input.const_term > 0.0) gaps.emplace_back(0.0, poles.front().rate);
    for (std::size_t k = 0; k + 1 < poles.size(); ++k)
      gaps.emplace_back(poles[k].rate, poles[k + 1].rate);
    if (input.slope > 0.0) gaps.emplace_back(poles.back().rate, inf);
  }

  sum.count_ok = atoms.size() == gaps.size();
  sum.alternation_ok = sum.count_ok;
  if (sum.count_ok) {
    for (std::size_t j = 0; j < gaps.size(); ++j) {
      if (!(atoms[j].rate > gaps[j].first && atoms[j].rate < gaps[j].second))
        sum.alternation_ok = false;
    }
  }
  return sum;
}

}  // namespace visco
