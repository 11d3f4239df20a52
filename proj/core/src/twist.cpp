#include <algorithm>
#include <string>

#include "ptw/errors.hpp"
#include "ptw/matrix.hpp"

namespace ptw {

Matrix twist(const Matrix& a, Side side) {
  const int k = a.rows();
  const int n = a.cols();
  const auto nk = matrix_necklace(a);
  const Necklace& bases = side == Side::Right ? nk.forward : nk.reverse;
  Matrix out(k, n);
  for (int c = 1; c <= n; ++c) {
    if (a.column_is_zero(c)) continue;
    const Subset& basis = bases[c];
    Matrix system(k, k);
    Vector rhs(k);
    for (int j = 0; j < k; ++j) {
      auto col = a.column(basis[j]);
      for (int r = 0; r < k; ++r) system.at(j, r) = col[r];
      if (basis[j] == c) rhs[j] = 1;
    }
    out.set_column(c, solve(system, rhs));
  }
  return out;
}

Matrix twist_times(Matrix a, Side side, int times) {
  for (int i = 0; i < times; ++i) a = twist(a, side);
  return a;
}

Matrix double_twist_mu(const Matrix& a) {
  const int k = a.rows();
  const int n = a.cols();
  const auto nk = matrix_necklace(a);
  const AffinePerm& pi = nk.perm;
  std::vector<Rational> necklace_minor(n);
  for (int c = 1; c <= n; ++c) {
    necklace_minor[c - 1] = minor(a, nk.forward[c]);
    if (necklace_minor[c - 1] == 0) {
      throw MathError("necklace minor vanishes", "I_" + std::to_string(c) + " = {" +
                                                     format_subset(nk.forward[c]) + "}");
    }
  }
  Matrix out(k, n);
  for (int i = 1; i <= n; ++i) {
    int implied = 0;
    for (long j = i - n + 1; j < i; ++j) {
      if (pi_implies(pi, i, j)) ++implied;
    }
    const int wraps = pi(i) > n ? 1 : 0;
    const int exponent = implied + (k - 1) * wraps;
    Rational factor = necklace_minor[i - 1] / necklace_minor[mod1(i + 1, n) - 1];
    if (exponent % 2) factor = -factor;
    Vector col = a.column(pi(i));
    for (auto& q : col) q *= factor;
    out.set_column(i, col);
  }
  return out;
}

Matrix matrix_from_pluecker(const PlueckerVector& p) {
  const int k = p.k;
  const int n = p.n;
  const Subset* pivot = nullptr;
  for (const auto& [s, v] : p.coords) {
    if (v != 0) {
      pivot = &s;
      break;
    }
  }
  if (!pivot) throw MathError("all Pluecker coordinates vanish");
  const Rational scale = p.at(*pivot);
  Matrix a(k, n);
  for (int r = 0; r < k; ++r) a.at(r, (*pivot)[r] - 1) = 1;
  for (int c = 1; c <= n; ++c) {
    if (contains(*pivot, c)) continue;
    for (int r = 0; r < k; ++r) {
      Subset j = set_plus(set_minus(*pivot, (*pivot)[r]), c);
      int pos = static_cast<int>(std::lower_bound(j.begin(), j.end(), c) - j.begin());
      Rational v = p.at(j) / scale;
      if ((pos - r) % 2) v = -v;
      a.at(r, c - 1) = v;
    }
  }
  if (k > 0) {
    for (int c = 0; c < n; ++c) a.at(0, c) *= scale;
  }
  if (k > 0 && pluecker(a) != p) {
    throw MathError("input violates the Pluecker relations", "pivot {" + format_subset(*pivot) + "}");
  }
  return a;
}

}  // namespace ptw
