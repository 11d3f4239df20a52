#include "ptw/matrix.hpp"

#include <algorithm>
#include <string>

#include "ptw/errors.hpp"

namespace ptw {

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(int size) {
  Matrix m(size, size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

Vector Matrix::column(long a) const {
  const int c = mod1(a, cols_) - 1;
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_column(long a, const Vector& v) {
  const int c = mod1(a, cols_) - 1;
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool Matrix::column_is_zero(long a) const {
  const int c = mod1(a, cols_) - 1;
  for (int r = 0; r < rows_; ++r) {
    if (at(r, c) != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int m = 0; m < cols_; ++m) {
      if (at(r, m) == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) out.at(r, c) += at(r, m) * rhs.at(m, c);
    }
  }
  return out;
}

Rational determinant(Matrix m) {
  const int n = m.rows();
  if (n != m.cols()) throw InputError("determinant of a non-square matrix");
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    const Rational p = m.at(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col) / p;
      for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

int rank(const Matrix& m) {
  SpanBuilder span(m.rows());
  for (int c = 1; c <= m.cols(); ++c) span.add(m.column(c));
  return span.dimension();
}

Matrix inverse(const Matrix& m) {
  const int n = m.rows();
  Matrix out(n, n);
  for (int c = 0; c < n; ++c) {
    Vector e(n);
    e[c] = 1;
    auto x = solve(m, e);
    for (int r = 0; r < n; ++r) out.at(r, c) = x[r];
  }
  return out;
}

Vector solve(const Matrix& m, const Vector& rhs) {
  const int n = m.rows();
  if (n != m.cols() || static_cast<int>(rhs.size()) != n) throw InputError("bad linear system shape");
  Matrix a = m;
  Vector b = rhs;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw MathError("singular linear system");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      std::swap(b[pivot], b[col]);
    }
    const Rational p = a.at(col, col);
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col) / p;
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
      b[r] -= f * b[col];
    }
  }
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a.at(i, i);
  return x;
}

Rational dot(const Vector& x, const Vector& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vector SpanBuilder::reduce(Vector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) v[j] -= f * basis_[i][j];
  }
  return v;
}

bool SpanBuilder::contains(const Vector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool SpanBuilder::add(const Vector& v) {
  auto r = reduce(v);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j) {
    if (r[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational p = r[pivot];
  for (auto& q : r) q /= p;
  // Keep the basis fully reduced at every pivot.
  for (auto& b : basis_) {
    const Rational f = b[pivot];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) b[j] -= f * r[j];
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

Rational minor(const Matrix& a, const std::vector<int>& columns) {
  const int k = a.rows();
  if (static_cast<int>(columns.size()) != k) {
    throw InputError("minor needs exactly " + std::to_string(k) + " columns");
  }
  Matrix sub(k, k);
  for (int j = 0; j < k; ++j) {
    auto col = a.column(columns[j]);
    for (int r = 0; r < k; ++r) sub.at(r, j) = col[r];
  }
  return determinant(std::move(sub));
}

const Rational& PlueckerVector::at(const Subset& s) const {
  auto it = coords.find(s);
  if (it == coords.end()) throw InputError("no Pluecker coordinate for {" + format_subset(s) + "}");
  return it->second;
}

bool PlueckerVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& kv) { return kv.second == 0; });
}

PlueckerVector pluecker(const Matrix& a) {
  PlueckerVector p;
  p.n = a.cols();
  p.k = a.rows();
  for (const auto& s : k_subsets(p.n, p.k)) p.coords[s] = minor(a, s);
  return p;
}

bool proportional(const PlueckerVector& lhs, const PlueckerVector& rhs) {
  if (lhs.n != rhs.n || lhs.k != rhs.k) return false;
  Rational ratio(0);
  for (const auto& [s, v] : lhs.coords) {
    const Rational& w = rhs.at(s);
    if ((v == 0) != (w == 0)) return false;
    if (v == 0) continue;
    if (ratio == 0) {
      ratio = v / w;
    } else if (v != ratio * w) {
      return false;
    }
  }
  return ratio != 0;
}

MatrixNecklace matrix_necklace(const Matrix& a) {
  const int k = a.rows();
  const int n = a.cols();
  if (rank(a) != k) throw MathError("matrix does not have full row rank " + std::to_string(k));
  std::vector<int> values(n);
  for (int c = 1; c <= n; ++c) {
    if (a.column_is_zero(c)) {
      values[c - 1] = c;
      continue;
    }
    const Vector target = a.column(c);
    SpanBuilder span(k);
    for (int r = c + 1; r <= c + n; ++r) {
      span.add(a.column(r));
      if (span.contains(target)) {
        values[c - 1] = r;
        break;
      }
    }
  }
  MatrixNecklace out{AffinePerm(n, values), {Direction::Forward, n, k, {}},
                     {Direction::Reverse, n, k, {}}};
  for (int c = 1; c <= n; ++c) {
    SpanBuilder fwd(k), rev(k);
    std::vector<int> fwd_cols, rev_cols;
    for (int step = 0; step < n; ++step) {
      if (fwd.add(a.column(c + step))) fwd_cols.push_back(c + step);
      if (rev.add(a.column(c - step))) rev_cols.push_back(c - step);
    }
    out.forward.sets.push_back(normalize_mod(fwd_cols, n));
    out.reverse.sets.push_back(normalize_mod(rev_cols, n));
  }
  return out;
}

}  // namespace ptw
