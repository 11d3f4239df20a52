#pragma once

#include <map>
#include <vector>

#include "ptw/positroid.hpp"
#include "ptw/rational.hpp"
#include "ptw/subset.hpp"

namespace ptw {

using Vector = std::vector<Rational>;

// k x n rational matrix. Columns are 1-based and cyclic: A_{a+n} = A_a.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(int size);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // 0-based entry access.
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vector column(long a) const;
  void set_column(long a, const Vector& v);
  bool column_is_zero(long a) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(Matrix m);
int rank(const Matrix& m);
// Throws MathError if singular.
Matrix inverse(const Matrix& m);
// Unique x with m x = rhs; throws MathError if m is singular.
Vector solve(const Matrix& m, const Vector& rhs);
Rational dot(const Vector& x, const Vector& y);

// Incremental span of vectors in Q^k kept in reduced echelon form.
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}
  bool contains(const Vector& v) const;
  // Adds v if independent; returns whether it was added.
  bool add(const Vector& v);
  int dimension() const { return static_cast<int>(basis_.size()); }

 private:
  Vector reduce(Vector v) const;
  int dim_;
  std::vector<Vector> basis_;
  std::vector<int> pivots_;
};

// det(A_{i1}, ..., A_{ik}) in the given order; entries may lie outside [1, n].
Rational minor(const Matrix& a, const std::vector<int>& columns);

// Total map from k-subsets of [n] to coordinates.
struct PlueckerVector {
  int n = 0;
  int k = 0;
  std::map<Subset, Rational> coords;

  const Rational& at(const Subset& s) const;
  bool is_zero() const;
  bool operator==(const PlueckerVector& other) const = default;
};

PlueckerVector pluecker(const Matrix& a);
// True iff lhs = c * rhs for a nonzero rational c.
bool proportional(const PlueckerVector& lhs, const PlueckerVector& rhs);

struct MatrixNecklace {
  AffinePerm perm;
  Necklace forward;
  Necklace reverse;
};

// Requires rank k; throws MathError otherwise.
MatrixNecklace matrix_necklace(const Matrix& a);

enum class Side { Right, Left };

// Dual basis twist; requires rank k.
Matrix twist(const Matrix& a, Side side);
Matrix twist_times(Matrix a, Side side, int times);
// The sign-corrected map that agrees with the double right twist on face labels.
Matrix double_twist_mu(const Matrix& a);

// Some k x n matrix whose Pluecker vector equals p exactly.
Matrix matrix_from_pluecker(const PlueckerVector& p);

}  // namespace ptw
