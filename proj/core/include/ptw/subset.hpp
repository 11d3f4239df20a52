#pragma once

#include <string>
#include <vector>

namespace ptw {

// Sorted, strictly increasing 1-based members of [1, n].
using Subset = std::vector<int>;

// Residue of a in [1, n].
inline int mod1(long a, int n) {
  long r = ((a - 1) % n + n) % n;
  return static_cast<int>(r) + 1;
}

// All k-subsets of [n] in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);
long binomial(int n, int k);

// Reduces every entry mod n into [1, n] and sorts. Throws InputError on repeats.
Subset normalize_mod(const std::vector<int>& values, int n);
bool is_valid_subset(const Subset& s, int n);
bool contains(const Subset& s, int x);
Subset set_minus(const Subset& s, int x);
Subset set_plus(const Subset& s, int x);

// "1,2,4" (the empty set prints as "").
std::string format_subset(const Subset& s);
// Inverse of format_subset; validates against n when n > 0.
Subset parse_subset(const std::string& text, int n = 0);

}  // namespace ptw
