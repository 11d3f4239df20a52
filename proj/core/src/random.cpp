#include "ptw/random.hpp"

#include <limits>

namespace ptw {

std::uint64_t WeightRng::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r > limit);
  return r % bound;
}

long WeightRng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational WeightRng::weight() {
  const long num = between(1, 1000);
  const long den = between(1, 1000);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational WeightRng::signed_weight() {
  Rational q = weight();
  return below(2) ? -q : q;
}

}  // namespace ptw
