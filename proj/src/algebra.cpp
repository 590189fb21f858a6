#include "skly3/algebra.hpp"

namespace skly3 {

void validate_params(const Field& F, const SklyParams& p) {
  const Scalar &a = p.a, &b = p.b, &c = p.c;
  if (F.is_zero(a) && F.is_zero(b) && F.is_zero(c))
    throw Error("ParamsInForbiddenLocus", "(a,b,c) = (0,0,0)");
  if (F.is_zero(F.mul(F.mul(a, b), c)))
    throw Error("ParamsInForbiddenLocus", "abc = 0");
  Scalar a3 = F.mul(F.mul(a, a), a), b3 = F.mul(F.mul(b, b), b),
         c3 = F.mul(F.mul(c, c), c);
  if (F.eq(a3, b3) && F.eq(b3, c3))
    throw Error("ParamsInForbiddenLocus", "a^3 = b^3 = c^3");
  Scalar lhs = F.mul(F.from_int(3), F.mul(F.mul(a, b), c));
  Scalar lhs3 = F.mul(F.mul(lhs, lhs), lhs);
  Scalar s = F.add(F.add(a3, b3), c3);
  Scalar rhs3 = F.mul(F.mul(s, s), s);
  if (F.eq(lhs3, rhs3))
    throw Error("ParamsInForbiddenLocus", "(3abc)^3 = (a^3+b^3+c^3)^3");
}

RelationTensor RelationTensor::from_params(const SklyParams& p) {
  RelationTensor t;
  for (auto& pl : t.lam)
    for (auto& row : pl) row.fill(Scalar(0));
  // f1 = a yz + b zy + c xx, f2 = a zx + b xz + c yy, f3 = a xy + b yx + c zz
  t.lam[0][1][2] = p.a; t.lam[0][2][1] = p.b; t.lam[0][0][0] = p.c;
  t.lam[1][2][0] = p.a; t.lam[1][0][2] = p.b; t.lam[1][1][1] = p.c;
  t.lam[2][0][1] = p.a; t.lam[2][1][0] = p.b; t.lam[2][2][2] = p.c;
  return t;
}

AlgebraTable build_algebra(const Field& F, const SklyParams& p, int max_deg) {
  validate_params(F, p);
  if (max_deg < 3) throw Error("InvalidArgument", "max_deg must be >= 3");

  AlgebraTable T(F, p, max_deg);
  T.dims.assign(max_deg + 1, 0);
  T.dims[0] = 1;
  T.dims[1] = 3;
  T.words_.resize(max_deg + 1);
  T.words_[1] = {{0, 0}, {0, 1}, {0, 2}};
  for (int g = 0; g < 3; ++g) {
    T.rmul_[g].resize(max_deg);
    T.lmul_[g].resize(max_deg);
    Matrix e(3, 1);
    e.at(g, 0) = 1;
    T.rmul_[g][0] = e;
    T.lmul_[g][0] = e;
  }

  for (int d = 2; d <= max_deg; ++d) {
    int n_words = 3 * T.dims[d - 1];
    // relation rows in the word space of A_{d-1} (x) V
    Matrix rel_rows(3 * T.dims[d - 2], n_words);
    int row = 0;
    for (int m = 0; m < T.dims[d - 2]; ++m) {
      for (int k = 0; k < 3; ++k, ++row) {
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            const Scalar& l = T.rel.at(k, i, j);
            if (F.is_zero(l)) continue;
            const Matrix& mi = T.rmul_[i][d - 2];  // A_{d-2} -> A_{d-1}
            for (int t = 0; t < T.dims[d - 1]; ++t)
              if (!F.is_zero(mi.at(t, m)))
                rel_rows.at(row, 3 * t + j) =
                    F.add(rel_rows.at(row, 3 * t + j), F.mul(l, mi.at(t, m)));
          }
        }
      }
    }
    QuotientSpace q = quotient_by_columns(F, n_words, rel_rows.transpose());
    T.dims[d] = q.dim();
    if (T.dims[d] != (d + 1) * (d + 2) / 2)
      throw Error("DimensionMismatch",
                  "dim A_" + std::to_string(d) + " = " + std::to_string(T.dims[d]) +
                      ", expected " + std::to_string((d + 1) * (d + 2) / 2));
    T.words_[d].reserve(T.dims[d]);
    for (int col : q.section_cols) T.words_[d].push_back({col / 3, col % 3});

    for (int g = 0; g < 3; ++g) {
      Matrix rm(T.dims[d], T.dims[d - 1]);
      for (int m = 0; m < T.dims[d - 1]; ++m)
        for (int i = 0; i < T.dims[d]; ++i) rm.at(i, m) = q.map.at(i, 3 * m + g);
      T.rmul_[g][d - 1] = std::move(rm);
    }
    for (int g = 0; g < 3; ++g) {
      Matrix lm(T.dims[d], T.dims[d - 1]);
      for (int f = 0; f < T.dims[d - 1]; ++f) {
        auto [m, j] = T.words_[d - 1][f];
        // g * (b_m x_j) = (g * b_m) * x_j
        std::vector<Scalar> gm(T.dims[d - 1], Scalar(0));
        const Matrix& lprev = T.lmul_[g][d - 2];
        for (int t = 0; t < T.dims[d - 1]; ++t) gm[t] = lprev.at(t, m);
        auto col = mat_apply(F, T.rmul_[j][d - 1], gm);
        for (int i = 0; i < T.dims[d]; ++i) lm.at(i, f) = col[i];
      }
      T.lmul_[g][d - 1] = std::move(lm);
    }
  }
  return T;
}

Matrix AlgebraTable::rmul_basis(int e, int f, int d) const {
  if (e == 1) return rmul_[f][d];
  auto [m, j] = words_[e][f];
  return mat_mul(field, rmul_[j][d + e - 1], rmul_basis(e - 1, m, d));
}

Matrix AlgebraTable::lmul_basis(int e, int f, int d) const {
  if (e == 1) return lmul_[f][d];
  auto [m, j] = words_[e][f];
  // b_f = b_m x_j acts on the left as lmul(b_m) after lmul(x_j)
  return mat_mul(field, lmul_basis(e - 1, m, d + 1), lmul_[j][d]);
}

Matrix AlgebraTable::rmul_elem(int e, const std::vector<Scalar>& w, int d) const {
  if (d + e > max_deg) throw Error("DegreeBudget", "rmul_elem beyond max_deg");
  Matrix r(dims[d + e], dims[d]);
  for (int f = 0; f < dims[e]; ++f)
    if (!field.is_zero(w[f]))
      r = mat_add(field, r, mat_scale(field, w[f], rmul_basis(e, f, d)));
  return r;
}

Matrix AlgebraTable::lmul_elem(int e, const std::vector<Scalar>& w, int d) const {
  if (d + e > max_deg) throw Error("DegreeBudget", "lmul_elem beyond max_deg");
  Matrix r(dims[d + e], dims[d]);
  for (int f = 0; f < dims[e]; ++f)
    if (!field.is_zero(w[f]))
      r = mat_add(field, r, mat_scale(field, w[f], lmul_basis(e, f, d)));
  return r;
}

std::vector<Scalar> find_central_cubic(const AlgebraTable& T) {
  if (T.max_deg < 4) throw Error("DegreeBudget", "central cubic needs max_deg >= 4");
  const Field& F = T.field;
  Matrix sys(0, T.dims[3]);
  for (int g = 0; g < 3; ++g) {
    Matrix diff = mat_sub(F, T.rmul_gen(g, 3), T.lmul_gen(g, 3));
    sys = sys.rows() == 0 ? diff : vstack(sys, diff);
  }
  Matrix ker = kernel_basis(F, sys);
  if (ker.cols() == 0)
    throw Error("NoCentralCubic", "centrality system has no solution");
  if (ker.cols() > 1)
    throw Error("CenterTooBig", "degree-3 center has dimension " +
                                    std::to_string(ker.cols()));
  std::vector<Scalar> g(T.dims[3], Scalar(0));
  for (int i = 0; i < T.dims[3]; ++i) g[i] = ker.at(i, 0);
  for (int i = 0; i < T.dims[3]; ++i) {
    if (!F.is_zero(g[i])) {
      Scalar s = F.inv(g[i]);
      for (auto& v : g) v = F.mul(s, v);
      break;
    }
  }
  return g;
}

CyclicModuleTable cyclic_quotient(const AlgebraTable& T, int wdeg,
                                  const std::vector<Scalar>& w, QuotientSide side) {
  const Field& F = T.field;
  if (wdeg != 1 && wdeg != 3)
    throw Error("InvalidArgument", "cyclic quotient generator must have degree 1 or 3");
  bool zero = true;
  for (const auto& v : w)
    if (!F.is_zero(v)) { zero = false; break; }
  if (zero) throw Error("ZeroElement", "cyclic quotient by zero element");

  CyclicModuleTable M;
  M.side = side;
  M.wdeg = wdeg;
  M.w = w;
  int top = T.max_deg;
  M.dims.resize(top + 1);
  M.proj_.resize(top + 1);
  M.section_.resize(top + 1);
  for (int g = 0; g < 3; ++g) M.act_[g].resize(top);

  for (int d = 0; d <= top; ++d) {
    QuotientSpace q;
    if (d < wdeg) {
      q.map = Matrix::identity(T.dims[d]);
      for (int i = 0; i < T.dims[d]; ++i) q.section_cols.push_back(i);
    } else {
      Matrix sub = side == QuotientSide::RightQuotient
                       ? T.lmul_elem(wdeg, w, d - wdeg)   // w * A_{d-wdeg}
                       : T.rmul_elem(wdeg, w, d - wdeg);  // A_{d-wdeg} * w
      q = quotient_by_columns(F, T.dims[d], sub);
    }
    M.dims[d] = q.dim();
    Matrix sec(T.dims[d], q.dim());
    for (int i = 0; i < q.dim(); ++i) sec.at(q.section_cols[i], i) = 1;
    M.proj_[d] = q.map;
    M.section_[d] = std::move(sec);
  }
  if (wdeg == 1)
    for (int d = 0; d <= top; ++d)
      if (M.dims[d] != d + 1)
        throw Error("DimensionMismatch", "line module dim at degree " +
                                             std::to_string(d));

  for (int d = 0; d < top; ++d)
    for (int g = 0; g < 3; ++g) {
      const Matrix& mul = side == QuotientSide::RightQuotient ? T.rmul_gen(g, d)
                                                              : T.lmul_gen(g, d);
      M.act_[g][d] = mat_mul(F, M.proj_[d + 1], mat_mul(F, mul, M.section_[d]));
    }
  return M;
}

std::vector<int> hilbert_data(const std::vector<int>& dims, int through) {
  if (through + 1 > static_cast<int>(dims.size()))
    throw Error("DegreeBudget", "hilbert_data beyond cached degrees");
  return std::vector<int>(dims.begin(), dims.begin() + through + 1);
}

}  // namespace skly3
