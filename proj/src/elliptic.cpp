#include "skly3/elliptic.hpp"

namespace skly3 {

std::vector<std::array<int, 3>> TernaryForm::monomials(int degree) {
  std::vector<std::array<int, 3>> out;
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  return out;
}

std::string TernaryForm::monomial_name(const std::array<int, 3>& m) {
  static const char* vars = "xyz";
  std::string s;
  for (int v = 0; v < 3; ++v) {
    if (m[v] == 0) continue;
    s += vars[v];
    if (m[v] > 1) s += std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

int TernaryForm::monomial_index(int degree, const std::array<int, 3>& m) {
  int idx = 0;
  for (int i = degree; i > m[0]; --i) idx += degree - i + 1;
  idx += (degree - m[0]) - m[1];
  return idx;
}

Scalar TernaryForm::eval(const Field& F, const std::array<Scalar, 3>& p) const {
  Scalar acc = F.zero();
  auto mons = monomials(degree);
  for (size_t t = 0; t < mons.size(); ++t) {
    if (F.is_zero(coeffs[t])) continue;
    Scalar term = coeffs[t];
    for (int v = 0; v < 3; ++v)
      for (int e = 0; e < mons[t][v]; ++e) term = F.mul(term, p[v]);
    acc = F.add(acc, term);
  }
  return acc;
}

bool TernaryForm::is_zero(const Field& F) const {
  for (const auto& c : coeffs)
    if (!F.is_zero(c)) return false;
  return true;
}

TernaryForm form_zero(const Field& F, int degree) {
  TernaryForm f;
  f.degree = degree;
  f.coeffs.assign(TernaryForm::monomials(degree).size(), F.zero());
  return f;
}

TernaryForm form_add(const Field& F, const TernaryForm& f, const TernaryForm& g) {
  if (f.degree != g.degree) throw Error("ShapeMismatch", "form degrees differ");
  TernaryForm out = f;
  for (size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = F.add(out.coeffs[i], g.coeffs[i]);
  return out;
}

TernaryForm form_scale(const Field& F, const Scalar& c, const TernaryForm& f) {
  TernaryForm out = f;
  for (auto& v : out.coeffs) v = F.mul(c, v);
  return out;
}

TernaryForm form_mul(const Field& F, const TernaryForm& f, const TernaryForm& g) {
  TernaryForm out = form_zero(F, f.degree + g.degree);
  auto mf = TernaryForm::monomials(f.degree);
  auto mg = TernaryForm::monomials(g.degree);
  for (size_t i = 0; i < mf.size(); ++i) {
    if (F.is_zero(f.coeffs[i])) continue;
    for (size_t j = 0; j < mg.size(); ++j) {
      if (F.is_zero(g.coeffs[j])) continue;
      std::array<int, 3> m{mf[i][0] + mg[j][0], mf[i][1] + mg[j][1],
                           mf[i][2] + mg[j][2]};
      int idx = TernaryForm::monomial_index(out.degree, m);
      out.coeffs[idx] = F.add(out.coeffs[idx], F.mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  return out;
}

CurvePoint CurvePoint::from_coords(const Field& F,
                                   const std::array<Scalar, 3>& raw) {
  int lead = -1;
  for (int v = 0; v < 3; ++v)
    if (!F.is_zero(raw[v])) { lead = v; break; }
  if (lead < 0) throw Error("ZeroElement", "projective point needs a nonzero coordinate");
  Scalar inv = F.inv(raw[lead]);
  CurvePoint p;
  for (int v = 0; v < 3; ++v) p.c[v] = F.mul(raw[v], inv);
  return p;
}

Matrix multilinearized_matrix(const Field& F, const RelationTensor& rel,
                              const std::array<Scalar, 3>& p) {
  Matrix m(3, 3);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      Scalar s = F.zero();
      for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(rel.at(k, i, j), p[i]));
      m.at(k, j) = s;
    }
  return m;
}

Matrix companion_matrix(const Field& F, const RelationTensor& rel,
                        const std::array<Scalar, 3>& q) {
  Matrix m(3, 3);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      Scalar s = F.zero();
      for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(rel.at(k, i, j), q[j]));
      m.at(k, i) = s;
    }
  return m;
}

TernaryForm curve_equation(const Field& F, const RelationTensor& rel) {
  // Each entry N_{kj} is the linear form sum_i lam^k_{ij} p_i. Expand the
  // 3x3 determinant over permutations into a cubic in (x, y, z).
  TernaryForm out;
  out.degree = 3;
  out.coeffs.assign(TernaryForm::monomials(3).size(), F.zero());
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                  {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int t = 0; t < 6; ++t) {
    bool even = t < 3;
    for (int i0 = 0; i0 < 3; ++i0)
      for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = 0; i2 < 3; ++i2) {
          Scalar c = F.mul(F.mul(rel.at(0, i0, perms[t][0]), rel.at(1, i1, perms[t][1])),
                           rel.at(2, i2, perms[t][2]));
          if (F.is_zero(c)) continue;
          if (!even) c = F.neg(c);
          std::array<int, 3> mon{0, 0, 0};
          ++mon[i0]; ++mon[i1]; ++mon[i2];
          int idx = TernaryForm::monomial_index(3, mon);
          out.coeffs[idx] = F.add(out.coeffs[idx], c);
        }
  }
  if (out.is_zero(F)) throw Error("LinearCase", "det N vanishes identically");
  return out;
}

Geometry::Geometry(const Field& F, const SklyParams& par)
    : field(F), params((validate_params(F, par), par)),
      rel(RelationTensor::from_params(par)), cubic(curve_equation(F, rel)) {}

bool Geometry::on_curve(const CurvePoint& p) const {
  return field.is_zero(cubic.eval(field, p.c));
}

namespace {

CurvePoint kernel_point(const Field& F, const Matrix& m, const char* who) {
  Matrix k = kernel_basis(F, m);
  if (k.cols() != 1) throw Error("DegenerateKernel", who);
  return CurvePoint::from_coords(F, {k.at(0, 0), k.at(1, 0), k.at(2, 0)});
}

}  // namespace

CurvePoint Geometry::sigma(const CurvePoint& p) const {
  if (!on_curve(p)) throw Error("NotOnCurve", "sigma needs a curve point");
  return kernel_point(field, multilinearized_matrix(field, rel, p.c),
                      "kernel of N(p) is not a line");
}

CurvePoint Geometry::sigma_inverse(const CurvePoint& p) const {
  if (!on_curve(p)) throw Error("NotOnCurve", "sigma inverse needs a curve point");
  return kernel_point(field, companion_matrix(field, rel, p.c),
                      "kernel of N'(p) is not a line");
}

CurvePoint Geometry::sigma_pow(const CurvePoint& p, long long u) const {
  CurvePoint q = p;
  for (long long t = 0; t < u; ++t) q = sigma(q);
  for (long long t = 0; t > u; --t) q = sigma_inverse(q);
  return q;
}

std::vector<CurvePoint> Geometry::enumerate_points() const {
  if (!field.is_prime_field())
    throw Error("FieldNotFinite", "point enumeration needs a finite field");
  long p = field.p();
  std::vector<CurvePoint> out;
  auto push_if = [&](const std::array<Scalar, 3>& c) {
    CurvePoint pt{c};
    if (on_curve(pt)) out.push_back(pt);
  };
  for (long y = 0; y < p; ++y)
    for (long z = 0; z < p; ++z) push_if({Scalar(1), Scalar(y), Scalar(z)});
  for (long z = 0; z < p; ++z) push_if({Scalar(0), Scalar(1), Scalar(z)});
  push_if({Scalar(0), Scalar(0), Scalar(1)});
  return out;
}

std::vector<std::array<Scalar, 3>> point_module(const Geometry& geom,
                                                const CurvePoint& p, long long d0,
                                                long long d1) {
  if (d0 > d1) throw Error("InvalidArgument", "empty degree window");
  std::vector<std::array<Scalar, 3>> rows;
  CurvePoint q = geom.sigma_pow(p, d0);
  rows.push_back(q.c);
  for (long long u = d0; u < d1; ++u) {
    q = geom.sigma(q);
    rows.push_back(q.c);
  }
  return rows;
}

DeltaRep point_rep(const Geometry& geom, const CurvePoint& p) {
  const Field& F = geom.field;
  CurvePoint pm1 = geom.sigma_inverse(p);
  CurvePoint pm2 = geom.sigma_inverse(pm1);
  DeltaRep r;
  r.dims = {1, 1, 1};
  for (int g = 0; g < 3; ++g) {
    r.arr2[g] = Matrix(1, 1);
    r.arr2[g].at(0, 0) = pm2.c[g];
    r.arr1[g] = Matrix(1, 1);
    r.arr1[g].at(0, 0) = pm1.c[g];
  }
  if (!rep_is_valid(F, geom.rel, r))
    throw Error("InternalInvariant", "point rep fails the quiver relations");
  return r;
}

}  // namespace skly3
