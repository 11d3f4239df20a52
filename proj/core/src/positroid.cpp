#include "ptw/positroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ptw/errors.hpp"

namespace ptw {

namespace {

long floor_div(long a, long n) { return (a >= 0) ? a / n : -((-a + n - 1) / n); }

std::string perm_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Members of s sorted by their position in the cyclic order starting at a.
std::vector<int> cyclic_keys(const Subset& s, int a, int n) {
  std::vector<int> keys;
  keys.reserve(s.size());
  for (int x : s) keys.push_back(((x - a) % n + n) % n);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

bool is_bounded_affine_perm(int n, const std::vector<int>& values) {
  if (n < 1 || static_cast<int>(values.size()) != n) return false;
  std::vector<bool> seen(n, false);
  long total = 0;
  for (int a = 1; a <= n; ++a) {
    int v = values[a - 1];
    if (v < a || v > a + n) return false;
    int r = mod1(v, n) - 1;
    if (seen[r]) return false;
    seen[r] = true;
    total += v - a;
  }
  return total % n == 0;
}

AffinePerm::AffinePerm(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (!is_bounded_affine_perm(n, values_)) {
    throw InputError("not a bounded affine permutation: " + perm_string(values_));
  }
  long total = 0;
  inverse_.assign(n, 0);
  for (int a = 1; a <= n; ++a) {
    int v = values_[a - 1];
    total += v - a;
    int r = mod1(v, n);
    inverse_[r - 1] = a - (v - r);
  }
  k_ = static_cast<int>(total / n);
}

int AffinePerm::operator()(long a) const {
  long q = floor_div(a - 1, n_);
  long r = a - q * n_;
  return static_cast<int>(values_[r - 1] + q * n_);
}

int AffinePerm::inverse(long b) const {
  long q = floor_div(b - 1, n_);
  long r = b - q * n_;
  return static_cast<int>(inverse_[r - 1] + q * n_);
}

std::vector<AffinePerm> all_bounded_perms(int n) {
  std::vector<AffinePerm> out;
  std::vector<int> residues(n);
  std::iota(residues.begin(), residues.end(), 1);
  do {
    std::vector<int> fixed;
    std::vector<int> base(n);
    for (int a = 1; a <= n; ++a) {
      int r = residues[a - 1];
      if (r == a) {
        fixed.push_back(a);
        base[a - 1] = a;
      } else {
        base[a - 1] = r > a ? r : r + n;
      }
    }
    for (unsigned mask = 0; mask < (1u << fixed.size()); ++mask) {
      std::vector<int> vals = base;
      for (std::size_t j = 0; j < fixed.size(); ++j) {
        if (mask & (1u << j)) vals[fixed[j] - 1] += n;
      }
      out.emplace_back(n, vals);
    }
  } while (std::next_permutation(residues.begin(), residues.end()));
  std::sort(out.begin(), out.end(),
            [](const AffinePerm& x, const AffinePerm& y) { return x.values() < y.values(); });
  return out;
}

bool pi_implies(const AffinePerm& pi, long a, long b) {
  return b < a && a <= pi(a) && pi(a) < pi(b);
}

int length(const AffinePerm& pi) {
  const int n = pi.n();
  int count = 0;
  for (int a = 1; a <= n; ++a) {
    for (long b = a - n + 1; b < a; ++b) {
      if (pi_implies(pi, a, b)) ++count;
    }
  }
  return count;
}

bool gale_leq(const Subset& lhs, const Subset& rhs, int a, int n) {
  if (lhs.size() != rhs.size()) return false;
  auto l = cyclic_keys(lhs, a, n);
  auto r = cyclic_keys(rhs, a, n);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] > r[i]) return false;
  }
  return true;
}

namespace {

// Lexicographic extreme in cyclic-key order, then a check that it dominates.
Subset gale_extreme(const std::set<Subset>& bases, int a, int n, bool want_min) {
  if (bases.empty()) throw MathError("empty basis set has no Gale extremum");
  const Subset* best = nullptr;
  std::vector<int> best_keys;
  for (const auto& b : bases) {
    auto keys = cyclic_keys(b, a, n);
    if (!best || (want_min ? keys < best_keys : keys > best_keys)) {
      best = &b;
      best_keys = std::move(keys);
    }
  }
  for (const auto& b : bases) {
    bool ok = want_min ? gale_leq(*best, b, a, n) : gale_leq(b, *best, a, n);
    if (!ok) {
      throw MathError("no unique Gale " + std::string(want_min ? "minimum" : "maximum") +
                          " at a=" + std::to_string(a),
                      "{" + format_subset(*best) + "} vs {" + format_subset(b) + "}");
    }
  }
  return *best;
}

}  // namespace

Subset gale_min(const std::set<Subset>& bases, int a, int n) {
  return gale_extreme(bases, a, n, true);
}

Subset gale_max(const std::set<Subset>& bases, int a, int n) {
  return gale_extreme(bases, a, n, false);
}

Necklace necklace_from_bases(const std::set<Subset>& bases, int n, Direction dir) {
  if (bases.empty()) throw MathError("empty basis set");
  Necklace out;
  out.direction = dir;
  out.n = n;
  out.k = static_cast<int>(bases.begin()->size());
  for (int a = 1; a <= n; ++a) {
    out.sets.push_back(dir == Direction::Forward ? gale_min(bases, a, n)
                                                 : gale_max(bases, mod1(a + 1, n), n));
  }
  return out;
}

Necklace necklace_from_perm(const AffinePerm& pi, Direction dir) {
  const int n = pi.n();
  Necklace out;
  out.direction = dir;
  out.n = n;
  out.k = pi.k();
  for (int a = 1; a <= n; ++a) {
    std::vector<int> members;
    if (dir == Direction::Forward) {
      for (long b = a - n; b < a; ++b) {
        if (pi(b) >= a) members.push_back(pi(b));
      }
    } else {
      for (long c = a + 1; c <= a + n; ++c) {
        if (pi.inverse(c) <= a) members.push_back(pi.inverse(c));
      }
    }
    out.sets.push_back(normalize_mod(members, n));
  }
  return out;
}

namespace {

// The single element of next \ (cur \ {a}), or throws.
int exchanged_element(const Necklace& nk, int a, const Subset& cur, const Subset& next) {
  Subset rest = set_minus(cur, a);
  for (int x : rest) {
    if (!contains(next, x)) {
      throw InputError("necklace rule fails at a=" + std::to_string(a));
    }
  }
  std::vector<int> extra;
  for (int x : next) {
    if (!contains(rest, x)) extra.push_back(x);
  }
  if (extra.size() != 1) throw InputError("necklace rule fails at a=" + std::to_string(a));
  (void)nk;
  return extra.front();
}

}  // namespace

void check_necklace(const Necklace& nk) {
  if (static_cast<int>(nk.sets.size()) != nk.n || nk.n < 1) {
    throw InputError("necklace must have n elements");
  }
  for (const auto& s : nk.sets) {
    if (!is_valid_subset(s, nk.n) || static_cast<int>(s.size()) != nk.k) {
      throw InputError("necklace element {" + format_subset(s) + "} has wrong size or range");
    }
  }
  if (nk.direction == Direction::Forward) {
    perm_from_necklace(nk);
  } else {
    inverse_values_from_reverse(nk);
  }
}

std::vector<int> inverse_values_from_reverse(const Necklace& nk) {
  if (nk.direction != Direction::Reverse) throw InputError("expected a reverse necklace");
  const int n = nk.n;
  std::vector<int> inv(n);
  for (int a = 1; a <= n; ++a) {
    const Subset& cur = nk[a];
    const Subset& prev = nk[a - 1];
    if (!contains(cur, a)) {
      if (cur != prev) throw InputError("necklace rule fails at a=" + std::to_string(a));
      inv[a - 1] = a;
      continue;
    }
    int c = exchanged_element(nk, a, cur, prev);
    inv[a - 1] = c < a ? c : c - n;
  }
  return inv;
}

AffinePerm perm_from_necklace(const Necklace& nk) {
  const int n = nk.n;
  std::vector<int> values(n);
  if (nk.direction == Direction::Forward) {
    for (int a = 1; a <= n; ++a) {
      const Subset& cur = nk[a];
      const Subset& next = nk[a + 1];
      if (!contains(cur, a)) {
        if (cur != next) throw InputError("necklace rule fails at a=" + std::to_string(a));
        values[a - 1] = a;
        continue;
      }
      int c = exchanged_element(nk, a, cur, next);
      values[a - 1] = c > a ? c : c + n;
    }
  } else {
    auto inv = inverse_values_from_reverse(nk);
    for (int a = 1; a <= n; ++a) {
      int b = inv[a - 1];
      int r = mod1(b, n);
      values[r - 1] = a + (r - b);
    }
  }
  return AffinePerm(n, values);
}

Positroid positroid_from_necklace(const Necklace& nk) {
  if (nk.direction != Direction::Forward) throw InputError("expected a forward necklace");
  Positroid out;
  out.n = nk.n;
  out.k = nk.k;
  for (const auto& j : k_subsets(nk.n, nk.k)) {
    bool ok = true;
    for (int a = 1; a <= nk.n && ok; ++a) ok = gale_leq(nk[a], j, a, nk.n);
    if (ok) out.bases.insert(j);
  }
  return out;
}

}  // namespace ptw
