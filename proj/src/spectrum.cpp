#include "visco/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace visco {

DiscreteSpectrum::DiscreteSpectrum(std::vector<SpectrumAtom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.rate) || !std::isfinite(a.weight))
      throw NonFinite("spectrum atom has a non-finite rate or weight");
    if (!(a.rate > 0.0)) throw NonpositiveRate("spectrum rates must be positive");
    if (a.weight < 0.0) throw NegativeWeight("spectrum weights must be nonnegative");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const SpectrumAtom& x, const SpectrumAtom& y) { return x.rate < y.rate; });

  std::vector<SpectrumAtom> merged;
  merged.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    if (!merged.empty() && merged.back().rate == a.rate)
      merged.back().weight += a.weight;
    else
      merged.push_back(a);
  }
  std::erase_if(merged, [](const SpectrumAtom& a) { return a.weight == 0.0; });
  atoms_ = std::move(merged);
}

double DiscreteSpectrum::moment_sum() const noexcept {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight / (1.0 + a.rate);
  return s;
}

double DiscreteSpectrum::total_mass() const noexcept {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight;
  return s;
}

double DiscreteSpectrum::mass_over_rate() const noexcept {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight / a.rate;
  return s;
}

}  // namespace visco
