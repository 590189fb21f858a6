#include "skly3/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace skly3 {

void check_shape(const DeltaRep& r) {
  for (int g = 0; g < 3; ++g) {
    if (r.arr2[g].rows() != r.dims[1] || r.arr2[g].cols() != r.dims[0] ||
        r.arr1[g].rows() != r.dims[2] || r.arr1[g].cols() != r.dims[1])
      throw Error("ShapeMismatch", "DeltaRep arrow shapes");
  }
}

void check_shape(const Delta0Rep& r) {
  for (int g = 0; g < 3; ++g)
    if (r.arr[g].rows() != r.dims[1] || r.arr[g].cols() != r.dims[0])
      throw Error("ShapeMismatch", "Delta0Rep arrow shapes");
}

std::array<Matrix, 3> validate_rep(const Field& F, const RelationTensor& rel,
                                   const DeltaRep& r) {
  check_shape(r);
  std::array<Matrix, 3> res;
  for (int k = 0; k < 3; ++k) {
    Matrix acc(r.dims[2], r.dims[0]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Scalar& l = rel.at(k, i, j);
        if (F.is_zero(l)) continue;
        acc = mat_add(F, acc, mat_scale(F, l, mat_mul(F, r.arr1[j], r.arr2[i])));
      }
    res[k] = std::move(acc);
  }
  return res;
}

bool rep_is_valid(const Field& F, const RelationTensor& rel, const DeltaRep& r) {
  for (const auto& m : validate_rep(F, rel, r))
    if (!mat_is_zero(F, m)) return false;
  return true;
}

namespace {

// Linear system for intertwiners between reps given as vertex dims and arrows
// (each arrow a (source vertex, target vertex, matrix-in-r1, matrix-in-r2)).
struct ArrowPair {
  int s, t;
  const Matrix *m1, *m2;
};

HomSpace hom_from_arrows(const Field& F, const std::vector<int>& d1,
                         const std::vector<int>& d2,
                         const std::vector<ArrowPair>& arrows) {
  size_t nv = d1.size();
  std::vector<int> off(nv + 1, 0);
  for (size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + d2[v] * d1[v];
  int unknowns = off[nv];

  int eqs = 0;
  for (const auto& a : arrows) eqs += d2[a.t] * d1[a.s];
  Matrix sys(eqs, unknowns);
  int row = 0;
  for (const auto& a : arrows) {
    for (int i = 0; i < d2[a.t]; ++i)
      for (int j = 0; j < d1[a.s]; ++j, ++row) {
        // (phi_t M1 - M2 phi_s)[i][j] = 0
        for (int k = 0; k < d1[a.t]; ++k)
          sys.at(row, off[a.t] + i * d1[a.t] + k) =
              F.add(sys.at(row, off[a.t] + i * d1[a.t] + k), a.m1->at(k, j));
        for (int k = 0; k < d2[a.s]; ++k)
          sys.at(row, off[a.s] + k * d1[a.s] + j) =
              F.sub(sys.at(row, off[a.s] + k * d1[a.s] + j), a.m2->at(i, k));
      }
  }
  Matrix ker = kernel_basis(F, sys);
  HomSpace h{ker.cols(), {}};
  for (int c = 0; c < ker.cols(); ++c) {
    std::vector<Scalar> v(unknowns);
    for (int i = 0; i < unknowns; ++i) v[i] = ker.at(i, c);
    h.basis.push_back(std::move(v));
  }
  return h;
}

}  // namespace

HomSpace hom_space(const Field& F, const DeltaRep& r1, const DeltaRep& r2) {
  check_shape(r1);
  check_shape(r2);
  std::vector<ArrowPair> arrows;
  for (int g = 0; g < 3; ++g) {
    arrows.push_back({0, 1, &r1.arr2[g], &r2.arr2[g]});
    arrows.push_back({1, 2, &r1.arr1[g], &r2.arr1[g]});
  }
  return hom_from_arrows(F, {r1.dims[0], r1.dims[1], r1.dims[2]},
                         {r2.dims[0], r2.dims[1], r2.dims[2]}, arrows);
}

HomSpace hom_space(const Field& F, const Delta0Rep& r1, const Delta0Rep& r2) {
  check_shape(r1);
  check_shape(r2);
  std::vector<ArrowPair> arrows;
  for (int g = 0; g < 3; ++g) arrows.push_back({0, 1, &r1.arr[g], &r2.arr[g]});
  return hom_from_arrows(F, {r1.dims[0], r1.dims[1]}, {r2.dims[0], r2.dims[1]},
                         arrows);
}

bool reps_isomorphic(const Field& F, const DeltaRep& r1, const DeltaRep& r2) {
  if (r1.dims != r2.dims) return false;
  HomSpace h = hom_space(F, r1, r2);
  if (h.dim == 0) return r1.dims == std::array<int, 3>{0, 0, 0};
  std::array<int, 3> d = r1.dims;
  std::vector<int> off = {0, d[0] * d[0], d[0] * d[0] + d[1] * d[1]};
  auto invertible = [&](const std::vector<Scalar>& v) {
    for (int vert = 0; vert < 3; ++vert) {
      int n = d[vert];
      if (n == 0) continue;
      Matrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v[off[vert] + i * n + j];
      if (rank(F, m) != n) return false;
    }
    return true;
  };
  for (const auto& v : h.basis)
    if (invertible(v)) return true;
  // an invertible element may only show up as a combination of basis vectors
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Scalar> v(h.basis[0].size(), Scalar(0));
    for (const auto& b : h.basis) {
      Scalar c = F.random(rng);
      for (size_t i = 0; i < v.size(); ++i) v[i] = F.add(v[i], F.mul(c, b[i]));
    }
    if (invertible(v)) return true;
  }
  return false;
}

long long euler_form_quiver(const std::array<int, 3>& d1, const std::array<int, 3>& d2) {
  static const long long E[3][3] = {{1, -3, 3}, {0, 1, -3}, {0, 0, 1}};
  long long s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += static_cast<long long>(d1[i]) * E[i][j] * d2[j];
  return s;
}

std::array<int, 3> ext_dims(const Field& F, const RelationTensor& rel,
                            const DeltaRep& r1, const DeltaRep& r2) {
  check_shape(r1);
  check_shape(r2);
  const auto& a = r1.dims;
  const auto& b = r2.dims;
  // C0 = (+)_v Hom(r1_v, r2_v), C1 = (+)_arrows, C2 = (+)_relations
  std::vector<int> off0 = {0, b[0] * a[0], b[0] * a[0] + b[1] * a[1],
                           b[0] * a[0] + b[1] * a[1] + b[2] * a[2]};
  int c0 = off0[3];
  int s2 = b[1] * a[0], s1 = b[2] * a[1];
  int c1 = 3 * (s2 + s1);
  int c2 = 3 * (b[2] * a[0]);

  auto put_block = [&](Matrix& m, int r0, int cc0, const Matrix& blk, const Scalar& w) {
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j)
        m.at(r0 + i, cc0 + j) = F.add(m.at(r0 + i, cc0 + j), F.mul(w, blk.at(i, j)));
  };

  // d0: phi -> (phi_{v+1} A1 - A2 phi_v) per arrow.
  Matrix d0(c1, c0);
  for (int g = 0; g < 3; ++g) {
    // level -2 arrow g: rows block g*s2, entry (i,j) over Hom(a0,b1)
    for (int i = 0; i < b[1]; ++i)
      for (int j = 0; j < a[0]; ++j) {
        int row = g * s2 + i * a[0] + j;
        for (int k = 0; k < a[1]; ++k)
          d0.at(row, off0[1] + i * a[1] + k) =
              F.add(d0.at(row, off0[1] + i * a[1] + k), r1.arr2[g].at(k, j));
        for (int k = 0; k < b[0]; ++k)
          d0.at(row, off0[0] + k * a[0] + j) =
              F.sub(d0.at(row, off0[0] + k * a[0] + j), r2.arr2[g].at(i, k));
      }
    // level -1 arrow g
    for (int i = 0; i < b[2]; ++i)
      for (int j = 0; j < a[1]; ++j) {
        int row = 3 * s2 + g * s1 + i * a[1] + j;
        for (int k = 0; k < a[2]; ++k)
          d0.at(row, off0[2] + i * a[2] + k) =
              F.add(d0.at(row, off0[2] + i * a[2] + k), r1.arr1[g].at(k, j));
        for (int k = 0; k < b[1]; ++k)
          d0.at(row, off0[1] + k * a[1] + j) =
              F.sub(d0.at(row, off0[1] + k * a[1] + j), r2.arr1[g].at(i, k));
      }
  }

  // d1: psi -> sum_{ij} lam^k_{ij} (A2_{-1,j} psi_{-2,i} + psi_{-1,j} A1_{-2,i})
  Matrix d1(c2, c1);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Scalar& l = rel.at(k, i, j);
        if (F.is_zero(l)) continue;
        for (int r = 0; r < b[2]; ++r)
          for (int cidx = 0; cidx < a[0]; ++cidx) {
            int row = k * (b[2] * a[0]) + r * a[0] + cidx;
            // A2_{-1,j} psi_{-2,i}
            for (int t = 0; t < b[1]; ++t)
              d1.at(row, i * s2 + t * a[0] + cidx) =
                  F.add(d1.at(row, i * s2 + t * a[0] + cidx),
                        F.mul(l, r2.arr1[j].at(r, t)));
            // psi_{-1,j} A1_{-2,i}
            for (int t = 0; t < a[1]; ++t)
              d1.at(row, 3 * s2 + j * s1 + r * a[1] + t) =
                  F.add(d1.at(row, 3 * s2 + j * s1 + r * a[1] + t),
                        F.mul(l, r1.arr2[i].at(t, cidx)));
          }
      }

  if (!mat_is_zero(F, mat_mul(F, d1, d0)))
    throw Error("InternalInvariant", "ext complex d1 o d0 != 0");

  int rk0 = rank(F, d0), rk1 = rank(F, d1);
  int h0 = c0 - rk0;
  int h1 = c1 - rk1 - rk0;
  int h2 = c2 - rk1;
  if (h0 - h1 + h2 != euler_form_quiver(a, b))
    throw Error("EulerMismatch", "ext complex disagrees with Euler form");
  return {h0, h1, h2};
}

Delta0Rep res(const DeltaRep& r) {
  return Delta0Rep{{r.dims[0], r.dims[1]}, r.arr2};
}

Matrix big_matrix(const Field& F, const RelationTensor& rel, const Delta0Rep& f) {
  check_shape(f);
  int n2 = f.dims[0], n1 = f.dims[1];
  Matrix m(3 * n1, 3 * n2);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Scalar& l = rel.at(k, i, j);
        if (F.is_zero(l)) continue;
        for (int r = 0; r < n1; ++r)
          for (int c = 0; c < n2; ++c)
            m.at(j * n1 + r, k * n2 + c) =
                F.add(m.at(j * n1 + r, k * n2 + c), F.mul(l, f.arr[i].at(r, c)));
      }
  return m;
}

DeltaRep ind(const Field& F, const RelationTensor& rel, const Delta0Rep& f) {
  int n1 = f.dims[1];
  Matrix m = big_matrix(F, rel, f);
  QuotientSpace q = quotient_by_columns(F, 3 * n1, m);
  DeltaRep r;
  r.dims = {f.dims[0], f.dims[1], q.dim()};
  r.arr2 = f.arr;
  for (int g = 0; g < 3; ++g) {
    Matrix a(q.dim(), n1);
    for (int i = 0; i < q.dim(); ++i)
      for (int t = 0; t < n1; ++t) a.at(i, t) = q.map.at(i, g * n1 + t);
    r.arr1[g] = std::move(a);
  }
  return r;
}

namespace {

int joint_image_dim(const Field& F, const Delta0Rep& f, const Matrix& u_rows) {
  // u_rows: d x n basis of U; image = rows of (X u^T | Y u^T | Z u^T)^T
  Matrix ut = u_rows.transpose();
  Matrix img(0, f.dims[1]);
  for (int g = 0; g < 3; ++g) {
    Matrix part = mat_mul(F, f.arr[g], ut).transpose();
    img = img.rows() == 0 ? part : vstack(img, part);
  }
  return rank(F, img);
}

// Iterates all RREF matrices of shape d x n over F_p, calling cb; returns
// false if cb aborted the scan.
bool for_each_subspace(const Field& F, int n, int d,
                       const std::function<bool(const Matrix&)>& cb) {
  long p = F.p();
  std::vector<int> piv(d);
  std::function<bool(int, int)> choose = [&](int idx, int start) {
    if (idx == d) {
      // free positions: (row i, col c) with c > piv[i], c not a pivot
      std::vector<std::pair<int, int>> free_pos;
      std::vector<bool> is_piv(n, false);
      for (int i = 0; i < d; ++i) is_piv[piv[i]] = true;
      for (int i = 0; i < d; ++i)
        for (int c = piv[i] + 1; c < n; ++c)
          if (!is_piv[c]) free_pos.push_back({i, c});
      Matrix u(d, n);
      for (int i = 0; i < d; ++i) u.at(i, piv[i]) = 1;
      size_t total = 1;
      for (size_t i = 0; i < free_pos.size(); ++i) total *= p;
      for (size_t code = 0; code < total; ++code) {
        size_t rest = code;
        for (auto [i, c] : free_pos) {
          u.at(i, c) = Scalar(static_cast<long>(rest % p));
          rest /= p;
        }
        if (!cb(u)) return false;
      }
      return true;
    }
    for (int c = start; c < n; ++c) {
      piv[idx] = c;
      if (!choose(idx + 1, c + 1)) return false;
    }
    return true;
  };
  return choose(0, 0);
}

double subspace_count(long p, int n) {
  // sum over d of the Gaussian binomial [n choose d]_p
  double total = 0;
  for (int d = 0; d <= n; ++d) {
    double c = 1;
    for (int i = 0; i < d; ++i)
      c *= (std::pow(static_cast<double>(p), n - i) - 1) /
           (std::pow(static_cast<double>(p), i + 1) - 1);
    total += c;
  }
  return total;
}

}  // namespace

StabilityReport stability_check(const Field& F, const Delta0Rep& f,
                                StabilityMode mode, std::mt19937_64* rng,
                                int samples) {
  check_shape(f);
  if (f.dims[0] != f.dims[1])
    throw Error("InvalidArgument", "stability check needs dims (n,n)");
  int n = f.dims[0];
  StabilityReport rep{StabilityVerdict::Stable, mode == StabilityMode::Exhaustive,
                      0, std::nullopt};
  if (n == 0) return rep;

  auto classify = [&](const Matrix& u) {
    int du = u.rows();
    int dw = joint_image_dim(F, f, u);
    ++rep.subspaces_checked;
    if (dw < du) {
      rep.verdict = StabilityVerdict::Unstable;
      rep.witness = u;
      return false;  // cannot get worse
    }
    if (dw == du && du < n && rep.verdict == StabilityVerdict::Stable) {
      rep.verdict = StabilityVerdict::SemistableNotStable;
      rep.witness = u;
    }
    return true;
  };

  if (mode == StabilityMode::Exhaustive) {
    if (!F.is_prime_field())
      throw Error("FieldNotFinite", "exhaustive stability needs a finite field");
    if (subspace_count(F.p(), n) > 1e6)
      throw Error("BudgetExceeded", "too many subspaces to enumerate");
    for (int d = 1; d <= n && rep.verdict != StabilityVerdict::Unstable; ++d)
      for_each_subspace(F, n, d, classify);
  } else {
    std::mt19937_64 local(12345);
    std::mt19937_64& r = rng ? *rng : local;
    std::uniform_int_distribution<int> dd(1, n);
    for (int t = 0; t < samples && rep.verdict != StabilityVerdict::Unstable; ++t) {
      int d = dd(r);
      Matrix raw(d, n);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) raw.at(i, j) = F.random(r);
      Echelon e = row_reduce(F, raw);
      if (e.pivots.empty()) continue;
      Matrix u(static_cast<int>(e.pivots.size()), n);
      for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < n; ++j) u.at(i, j) = e.rref.at(i, j);
      classify(u);
    }
    // include the full space so the "joint image spans" condition is sampled too
    classify(Matrix::identity(n));
  }
  return rep;
}

MembershipCertificate membership_check_Dn(const Field& F, const RelationTensor& rel,
                                          const Delta0Rep& f,
                                          const std::vector<DeltaRep>& point_reps,
                                          bool enumerated) {
  check_shape(f);
  MembershipCertificate cert;
  cert.n = f.dims[0];
  cert.enumerated = enumerated;
  cert.dims_ok = (f.dims[0] == f.dims[1] && f.dims[0] >= 1);
  cert.checked_points = static_cast<int>(point_reps.size());
  for (size_t i = 0; i < point_reps.size(); ++i) {
    Delta0Rep pr = res(point_reps[i]);
    if (hom_space(F, f, pr).dim != 0 || hom_space(F, pr, f).dim != 0)
      cert.hom_failures.push_back(static_cast<int>(i));
  }
  cert.rank_m = rank(F, big_matrix(F, rel, f));
  cert.expected_rank_m = 2 * cert.n + 1;
  cert.rank_ok = (cert.rank_m == cert.expected_rank_m);
  cert.pass = cert.dims_ok && cert.hom_failures.empty() && cert.rank_ok;
  return cert;
}

DeltaRep line_object_rep(const AlgebraTable& T, const std::vector<Scalar>& u) {
  const Field& F = T.field;
  bool zero = true;
  for (const auto& v : u)
    if (!F.is_zero(v)) { zero = false; break; }
  if (zero) throw Error("ZeroElement", "line object needs a nonzero linear form");
  CyclicModuleTable L = cyclic_quotient(T, 1, u, QuotientSide::LeftQuotient);
  DeltaRep r;
  r.dims = {2, 1, 0};
  for (int g = 0; g < 3; ++g) {
    r.arr2[g] = L.act(g, 0).transpose();  // ((x_g .)|_{(A/Au)_0 -> (A/Au)_1})^*
    r.arr1[g] = Matrix(0, 1);
  }
  return r;
}

}  // namespace skly3
