#pragma once

#include <optional>
#include <vector>

#include "skly3/field.hpp"

namespace skly3 {

// Dense exact matrix, row-major. Immutable by convention once built.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  bool operator==(const Matrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_add(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Field& F, const Scalar& c, const Matrix& a);
std::vector<Scalar> mat_apply(const Field& F, const Matrix& a, const std::vector<Scalar>& v);
bool mat_is_zero(const Field& F, const Matrix& a);

// Horizontal / vertical stacking.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

enum class PivotOrder { FirstNonzero, LastNonzero };

struct Echelon {
  Matrix rref;             // reduced row echelon form
  std::vector<int> pivots; // pivot column per nonzero row
};

Echelon row_reduce(const Field& F, const Matrix& m,
                   PivotOrder order = PivotOrder::FirstNonzero);

int rank(const Field& F, const Matrix& m);

// Columns span the right kernel; cols(K) = cols(m) - rank(m).
Matrix kernel_basis(const Field& F, const Matrix& m);

// Some solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Field& F, const Matrix& m,
                                         const std::vector<Scalar>& b);

// Quotient of k^N by the column span of `sub` (an N x s matrix).
// `map` is the (N - rank) x N quotient projection; `section_cols[i]` is the
// coordinate of k^N whose image is the i-th quotient basis vector, so the
// obvious coordinate section splits `map`.
struct QuotientSpace {
  Matrix map;
  std::vector<int> section_cols;
  int dim() const { return map.rows(); }
};

QuotientSpace quotient_by_columns(const Field& F, int ambient_dim, const Matrix& sub);

}  // namespace skly3
