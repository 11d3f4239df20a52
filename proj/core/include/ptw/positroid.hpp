#pragma once

#include <set>
#include <vector>

#include "ptw/subset.hpp"

namespace ptw {

// Bounded affine permutation: a <= pi(a) <= a + n, extended n-periodically.
class AffinePerm {
 public:
  AffinePerm() = default;
  // Throws InputError when the values do not define a bounded affine permutation.
  AffinePerm(int n, std::vector<int> values);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& values() const { return values_; }

  // pi(a) for any integer a.
  int operator()(long a) const;
  // pi^{-1}(b) for any integer b.
  int inverse(long b) const;

  bool operator==(const AffinePerm& other) const = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<int> values_;
  std::vector<int> inverse_;  // inverse_[r-1] = pi^{-1}(r) for r in [1, n]
};

bool is_bounded_affine_perm(int n, const std::vector<int>& values);
// Every bounded affine permutation with period n, in lexicographic order of values.
std::vector<AffinePerm> all_bounded_perms(int n);

// a pi-implies b: b < a <= pi(a) < pi(b).
bool pi_implies(const AffinePerm& pi, long a, long b);
// Number of pairs (a, b), a in [1, n], b in (a - n, a), with a pi-implying b.
int length(const AffinePerm& pi);

enum class Direction { Forward, Reverse };

struct Necklace {
  Direction direction = Direction::Forward;
  int n = 0;
  int k = 0;
  std::vector<Subset> sets;  // sets[a-1] = I_a

  const Subset& operator[](long a) const { return sets[mod1(a, n) - 1]; }
  bool operator==(const Necklace& other) const = default;
};

struct Positroid {
  int n = 0;
  int k = 0;
  std::set<Subset> bases;

  bool operator==(const Positroid& other) const = default;
};

// The cyclic order starting at a: a < a+1 < ... < a-1.
bool gale_leq(const Subset& lhs, const Subset& rhs, int a, int n);
// Unique minimum under the a-Gale order; throws MathError if none exists.
Subset gale_min(const std::set<Subset>& bases, int a, int n);
Subset gale_max(const std::set<Subset>& bases, int a, int n);

// Forward: I_a is the a-minimal basis. Reverse: I_a is the (a+1)-maximal basis.
Necklace necklace_from_bases(const std::set<Subset>& bases, int n, Direction dir);
Necklace necklace_from_perm(const AffinePerm& pi, Direction dir = Direction::Forward);

// Forward necklaces give pi; reverse necklaces give pi as well (read through
// the mirrored rule, which produces pi^{-1} column by column).
AffinePerm perm_from_necklace(const Necklace& necklace);
// Values pi^{-1}(a) in [a - n, a] read off a reverse necklace.
std::vector<int> inverse_values_from_reverse(const Necklace& necklace);
void check_necklace(const Necklace& necklace);

Positroid positroid_from_necklace(const Necklace& necklace);

}  // namespace ptw
