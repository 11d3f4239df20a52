#include "ptw/subset.hpp"

#include <algorithm>
#include <sstream>

#include "ptw/errors.hpp"

namespace ptw {

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Subset normalize_mod(const std::vector<int>& values, int n) {
  Subset s;
  s.reserve(values.size());
  for (int v : values) s.push_back(mod1(v, n));
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError("repeated residue in subset");
  }
  return s;
}

bool is_valid_subset(const Subset& s, int n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) return false;
    if (i > 0 && s[i - 1] >= s[i]) return false;
  }
  return true;
}

bool contains(const Subset& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

Subset set_minus(const Subset& s, int x) {
  Subset out;
  out.reserve(s.size());
  for (int v : s) {
    if (v != x) out.push_back(v);
  }
  return out;
}

Subset set_plus(const Subset& s, int x) {
  Subset out = s;
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it == out.end() || *it != x) out.insert(it, x);
  return out;
}

std::string format_subset(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Subset parse_subset(const std::string& text, int n) {
  Subset s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw InputError("bad subset entry '" + item + "'");
      s.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad subset entry '" + item + "'");
    }
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError("repeated entry in subset '" + text + "'");
  }
  if (n > 0 && !is_valid_subset(s, n)) {
    throw InputError("subset '" + text + "' is not inside [1," + std::to_string(n) + "]");
  }
  return s;
}

}  // namespace ptw
