#pragma once

#include <cstddef>
#include <vector>

#include "visco/errors.hpp"

namespace visco {

struct SpectrumAtom {
  double rate = 0.0;    // decay rate, 1/time
  double weight = 0.0;  // measure mass carried by the atom
};

// Finite discrete Borel measure on ]0,inf[ -- the spectral currency of
// relaxation and creep models. Construction canonicalizes the atom list:
// sorted by strictly increasing rate, atoms with exactly equal rates merged
// by summing weights, zero-weight atoms dropped. Nearby-but-unequal rates
// are kept distinct; merging by tolerance would silently change the model,
// so callers that want it must pre-round.
//
// Rates spanning many orders of magnitude are stored faithfully, but the
// rational algebra downstream loses precision when two rates nearly
// coincide; the conversion engine reports an estimate of that loss instead
// of hiding it (see ReciprocalStats in duality.hpp).
class DiscreteSpectrum {
 public:
  DiscreteSpectrum() = default;  // empty measure

  // Validates and canonicalizes. Throws NonFinite, NonpositiveRate, or
  // NegativeWeight; a weight of exactly zero is accepted and dropped.
  explicit DiscreteSpectrum(std::vector<SpectrumAtom> atoms);

  const std::vector<SpectrumAtom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  // sum w_k / (1 + s_k), the integrability moment of the measure.
  double moment_sum() const noexcept;

  // sum w_k
  double total_mass() const noexcept;

  // sum w_k / s_k
  double mass_over_rate() const noexcept;

 private:
  std::vector<SpectrumAtom> atoms_;
};

}  // namespace visco
