#pragma once

// Deliberately naive reference implementations used to derive expected values.
// None of this code calls into the library's linear algebra or matching code.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ptw/graph.hpp"
#include "ptw/matrix.hpp"
#include "ptw/rational.hpp"
#include "ptw/subset.hpp"

namespace oracle {

using ptw::Rational;
using Rows = std::vector<std::vector<Rational>>;

inline std::string fixture(const std::string& name) { return std::string(PTW_FIXTURE_DIR) + "/" + name; }

// Leibniz expansion; fine for k <= 6.
inline Rational det(const Rows& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return 1;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (int r = 0; r < k && term != 0; ++r) term *= m[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rows rows_of(const ptw::Matrix& a) {
  Rows out(a.rows(), std::vector<Rational>(a.cols()));
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out[r][c] = a.at(r, c);
  }
  return out;
}

// Column c (1-based, any integer) of a k x n matrix.
inline std::vector<Rational> column(const Rows& a, long c) {
  const int n = static_cast<int>(a[0].size());
  const int idx = static_cast<int>(((c - 1) % n + n) % n);
  std::vector<Rational> v;
  for (const auto& row : a) v.push_back(row[idx]);
  return v;
}

inline Rational minor(const Rows& a, const ptw::Subset& cols) {
  Rows m(a.size(), std::vector<Rational>(cols.size()));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = a[r][cols[c] - 1];
  }
  return det(m);
}

inline std::map<ptw::Subset, Rational> pluecker(const Rows& a) {
  std::map<ptw::Subset, Rational> out;
  const int n = static_cast<int>(a[0].size());
  const int k = static_cast<int>(a.size());
  std::function<void(int, ptw::Subset&)> rec = [&](int next, ptw::Subset& cur) {
    if (static_cast<int>(cur.size()) == k) {
      out[cur] = minor(a, cur);
      return;
    }
    for (int c = next; c <= n; ++c) {
      cur.push_back(c);
      rec(c + 1, cur);
      cur.pop_back();
    }
  };
  ptw::Subset cur;
  rec(1, cur);
  return out;
}

// Rank by plain fraction Gaussian elimination over a list of vectors.
inline int rank(std::vector<std::vector<Rational>> vs) {
  int r = 0;
  const int dim = vs.empty() ? 0 : static_cast<int>(vs[0].size());
  for (int c = 0; c < dim && r < static_cast<int>(vs.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(vs.size()); ++i) {
      if (vs[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(vs[r], vs[pivot]);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
      if (i == r || vs[i][c] == 0) continue;
      const Rational f = vs[i][c] / vs[r][c];
      for (int j = 0; j < dim; ++j) vs[i][j] -= f * vs[r][j];
    }
    ++r;
  }
  return r;
}

inline bool in_span(const std::vector<std::vector<Rational>>& span, const std::vector<Rational>& v) {
  auto with = span;
  with.push_back(v);
  return rank(with) == rank(span);
}

// Twist straight from its defining dot-product relations, solved by Cramer's rule.
inline Rows twist(const Rows& a, bool right) {
  const int k = static_cast<int>(a.size());
  const int n = static_cast<int>(a[0].size());
  Rows out(k, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i) {
    const auto ai = column(a, i);
    if (std::all_of(ai.begin(), ai.end(), [](const Rational& x) { return x == 0; })) continue;
    Rows eqs{ai};
    std::vector<Rational> rhs{1};
    std::vector<std::vector<Rational>> span{ai};
    for (int step = 1; step < n; ++step) {
      const long j = right ? i + step : i - step;
      const auto aj = column(a, j);
      if (!in_span(span, aj)) {
        eqs.push_back(aj);
        rhs.push_back(0);
      }
      span.push_back(aj);
    }
    if (static_cast<int>(eqs.size()) != k) throw std::runtime_error("twist oracle: system is not square");
    const Rational d = det(eqs);
    for (int r = 0; r < k; ++r) {
      Rows m = eqs;
      for (int e = 0; e < k; ++e) m[e][r] = rhs[e];
      out[r][i - 1] = det(m) / d;
    }
  }
  return out;
}

// Perfect matchings by include/exclude recursion over the edge list.
inline std::vector<std::vector<int>> matchings(const ptw::PlabicGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> covered(g.num_vertices(), 0), cur;
  std::function<void(int)> rec = [&](int e) {
    if (e == g.num_edges()) {
      if (std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; })) out.push_back(cur);
      return;
    }
    rec(e + 1);
    bool ok = true;
    for (int node : g.ends[e]) ok = ok && (node < 0 || covered[node] == 0);
    if (!ok) return;
    for (int node : g.ends[e]) {
      if (node >= 0) covered[node] = 1;
    }
    cur.push_back(e);
    rec(e + 1);
    cur.pop_back();
    for (int node : g.ends[e]) {
      if (node >= 0) covered[node] = 0;
    }
  };
  rec(0);
  return out;
}

// i is in the boundary when its leg is used and ends white, or unused and ends black.
inline ptw::Subset boundary(const ptw::PlabicGraph& g, const std::vector<int>& m) {
  ptw::Subset out;
  for (int i = 1; i <= g.n; ++i) {
    int leg = -1;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (g.ends[e][0] == -i || g.ends[e][1] == -i) leg = e;
    }
    const int v = g.ends[leg][0] == -i ? g.ends[leg][1] : g.ends[leg][0];
    const bool used = std::find(m.begin(), m.end(), leg) != m.end();
    if (used == (g.colors[v] == ptw::Color::White)) out.push_back(i);
  }
  return out;
}

// Plücker vector of the weighted graph by summing over all matchings.
inline std::map<ptw::Subset, Rational> measure(const ptw::PlabicGraph& g, const std::vector<Rational>& z) {
  std::map<ptw::Subset, Rational> out;
  for (const auto& m : matchings(g)) {
    Rational w = 1;
    for (int e : m) w *= z[e];
    out[boundary(g, m)] += w;
  }
  return out;
}

}  // namespace oracle
