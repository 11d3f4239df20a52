#pragma once

#include <cstdint>
#include <random>

#include "ptw/rational.hpp"

namespace ptw {

// Portable draws: mt19937_64 output is fixed by the standard, and bounded
// integers come from rejection sampling instead of std distributions, whose
// algorithms vary between library implementations.
class WeightRng {
 public:
  explicit WeightRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  long between(long lo, long hi);
  // Numerator and denominator independently uniform in [1, 1000].
  Rational weight();
  // As weight(), with a uniformly random sign.
  Rational signed_weight();

 private:
  std::mt19937_64 engine_;
};

}  // namespace ptw
