#include "skly3/matrix.hpp"

namespace skly3 {

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("DimensionMismatch", "mat_mul shape");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (F.is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = F.add(c.at(i, j), F.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

Matrix mat_add(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("DimensionMismatch", "mat_add shape");
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return c;
}

Matrix mat_sub(const Field& F, const Matrix& a, const Matrix& b) {
  return mat_add(F, a, mat_scale(F, Scalar(-1), b));
}

Matrix mat_scale(const Field& F, const Scalar& c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = F.mul(c, a.at(i, j));
  return r;
}

std::vector<Scalar> mat_apply(const Field& F, const Matrix& a, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != a.cols())
    throw Error("DimensionMismatch", "mat_apply shape");
  std::vector<Scalar> r(a.rows(), Scalar(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!F.is_zero(a.at(i, j))) r[i] = F.add(r[i], F.mul(a.at(i, j), v[j]));
  return r;
}

bool mat_is_zero(const Field& F, const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!F.is_zero(a.at(i, j))) return false;
  return true;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("DimensionMismatch", "hstack");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("DimensionMismatch", "vstack");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

Echelon row_reduce(const Field& F, const Matrix& m, PivotOrder order) {
  Echelon e{m, {}};
  Matrix& a = e.rref;
  int r = 0;
  auto col_range = [&](int step) {
    return order == PivotOrder::FirstNonzero ? step : a.cols() - 1 - step;
  };
  for (int step = 0; step < a.cols() && r < a.rows(); ++step) {
    int c = col_range(step);
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!F.is_zero(a.at(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar s = F.inv(a.at(r, c));
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) = F.mul(s, a.at(r, j));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || F.is_zero(a.at(i, c))) continue;
      Scalar f = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(r, j)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

int rank(const Field& F, const Matrix& m) {
  return static_cast<int>(row_reduce(F, m).pivots.size());
}

Matrix kernel_basis(const Field& F, const Matrix& m) {
  Echelon e = row_reduce(F, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(m.cols(), static_cast<int>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    k.at(free_cols[j], static_cast<int>(j)) = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i)
      k.at(e.pivots[i], static_cast<int>(j)) =
          F.neg(e.rref.at(static_cast<int>(i), free_cols[j]));
  }
  return k;
}

std::optional<std::vector<Scalar>> solve(const Field& F, const Matrix& m,
                                         const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw Error("DimensionMismatch", "solve rhs size");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(F, aug);
  for (size_t i = 0; i < e.pivots.size(); ++i)
    if (e.pivots[i] == m.cols()) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(m.cols(), Scalar(0));
  for (size_t i = 0; i < e.pivots.size(); ++i)
    x[e.pivots[i]] = e.rref.at(static_cast<int>(i), m.cols());
  return x;
}

QuotientSpace quotient_by_columns(const Field& F, int ambient_dim, const Matrix& sub) {
  if (sub.cols() > 0 && sub.rows() != ambient_dim)
    throw Error("DimensionMismatch", "quotient subspace ambient dim");
  Echelon e = row_reduce(F, sub.transpose());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int c : e.pivots) is_pivot[c] = true;
  QuotientSpace q;
  for (int c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) q.section_cols.push_back(c);
  q.map = Matrix(static_cast<int>(q.section_cols.size()), ambient_dim);
  for (size_t i = 0; i < q.section_cols.size(); ++i) {
    q.map.at(static_cast<int>(i), q.section_cols[i]) = 1;
    // a pivot coordinate maps to minus the free part of its rref row
    for (size_t r = 0; r < e.pivots.size(); ++r)
      q.map.at(static_cast<int>(i), e.pivots[r]) =
          F.neg(e.rref.at(static_cast<int>(r), q.section_cols[i]));
  }
  return q;
}

}  // namespace skly3
