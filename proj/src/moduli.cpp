#include "skly3/moduli.hpp"

#include <algorithm>

namespace skly3 {

namespace {

// Right multiplication by s (coordinates in S_n) as a map A_d -> S_{n+d},
// built degreewise from the module action.
std::vector<Matrix> section_mult_maps(const AlgebraTable& T,
                                      const CyclicModuleTable& S, int n,
                                      const std::vector<Scalar>& s, int dmax) {
  std::vector<Matrix> mu(dmax + 1);
  Matrix m0(S.dims[n], 1);
  for (int i = 0; i < S.dims[n]; ++i) m0.at(i, 0) = s[i];
  mu[0] = m0;
  for (int d = 1; d <= dmax; ++d) {
    auto words = T.words_at(d);
    Matrix m(S.dims[n + d], static_cast<int>(words.size()));
    for (size_t f = 0; f < words.size(); ++f) {
      auto [prev, g] = words[f];
      // s * (b_prev x_g) = (s * b_prev) * x_g
      for (int i = 0; i < m.rows(); ++i) {
        Scalar acc = T.field.zero();
        for (int t = 0; t < mu[d - 1].rows(); ++t)
          acc = T.field.add(acc, T.field.mul(S.act(g, n + d - 1).at(i, t),
                                             mu[d - 1].at(t, prev)));
        m.at(i, static_cast<int>(f)) = acc;
      }
    }
    mu[d] = m;
  }
  return mu;
}

}  // namespace

IdealWitness construct_ideal_rep(const AlgebraTable& T, int n, std::uint64_t seed,
                                 int max_draws) {
  const Field& F = T.field;
  if (n < 1) throw Error("InvalidArgument", "need n >= 1");
  if (T.max_deg < n + 7)
    throw Error("DegreeBudget",
                "algebra table must reach degree " + std::to_string(n + 7));

  std::mt19937_64 rng(seed);
  IdealWitness w;
  w.n = n;
  w.seed = seed;

  // nonzero linear form u
  std::vector<Scalar> u(3, F.zero());
  do {
    for (auto& c : u) c = F.random(rng);
  } while (F.is_zero(u[0]) && F.is_zero(u[1]) && F.is_zero(u[2]));
  w.u = u;
  CyclicModuleTable S = cyclic_quotient(T, 1, u, QuotientSide::RightQuotient);

  // the multiplication maps must reach maximal rank up to the first degree
  // where the target is the smaller side (surjectivity from there on out)
  int d_surj = 1;
  while ((d_surj + 1) * (d_surj + 2) / 2 < S.dims[n + d_surj]) ++d_surj;
  int d_top = std::max(3, d_surj);
  if (T.max_deg < n + d_top + 1) throw Error("DegreeBudget", "degree window too small");

  std::vector<Matrix> mu;
  std::vector<Scalar> s(S.dims[n]);
  bool ok = false;
  for (int draw = 0; draw < max_draws && !ok; ++draw) {
    ++w.attempts;
    bool nz = false;
    for (auto& c : s) { c = F.random(rng); nz = nz || !F.is_zero(c); }
    if (!nz) continue;
    mu = section_mult_maps(T, S, n, s, d_top);
    w.certificate.clear();
    ok = true;
    for (int d = 1; d <= d_top; ++d) {
      int expected = std::min(mu[d].cols(), S.dims[n + d]);
      int rk = rank(F, mu[d]);
      w.certificate.push_back({d, rk, expected});
      if (rk != expected) ok = false;
    }
  }
  if (!ok) throw Error("NotSurjective", "no section reached maximal rank");
  w.s = s;

  // rep (S_{n-1}, S_n / k s, S_{n+1} / s A_1)
  Matrix scol(S.dims[n], 1);
  for (int i = 0; i < S.dims[n]; ++i) scol.at(i, 0) = s[i];
  QuotientSpace q1 = quotient_by_columns(F, S.dims[n], scol);
  QuotientSpace q0 = quotient_by_columns(F, S.dims[n + 1], mu[1]);
  Matrix sec1(S.dims[n], q1.dim());
  for (int i = 0; i < q1.dim(); ++i) sec1.at(q1.section_cols[i], i) = 1;

  w.rep.dims = {S.dims[n - 1], q1.dim(), q0.dim()};
  for (int g = 0; g < 3; ++g) {
    w.rep.arr2[g] = mat_mul(F, q1.map, S.act(g, n - 1));
    w.rep.arr1[g] = mat_mul(F, q0.map, mat_mul(F, S.act(g, n), sec1));
  }
  if (w.rep.dims != std::array<int, 3>{n, n, n - 1} ||
      !rep_is_valid(F, T.rel, w.rep))
    throw Error("CertificateFailed", "constructed rep is malformed");

  // cohomology of the twists: h0/h1 of A_{l+1} -> S_{n+l+1}
  for (int l = 0; l >= -3; --l) {
    int d = l + 1;
    int h0, h1;
    if (d < 0) {
      h0 = 0;
      h1 = S.dims[n + d];
    } else {
      h0 = mu[d].cols() - rank(F, mu[d]);
      h1 = S.dims[n + d] - rank(F, mu[d]);
    }
    w.cohomology.push_back({l, h0, h1});
  }

  // Hilbert series of I(-1) = ker(A_* -> S_{n+*}), enough degrees for the
  // third difference to settle
  int D = 7;
  std::vector<Matrix> mu_full = section_mult_maps(T, S, n, s, D);
  for (int d = 0; d <= D; ++d)
    w.ideal_hilbert.push_back(mu_full[d].cols() - rank(F, mu_full[d]));
  KClass shifted_in = class_from_hilbert(w.ideal_hilbert, 5);
  w.kclass = shift_class(shifted_in, 1);
  NormalizedClass nc = normalize_and_invariant(w.kclass);
  w.invariant = nc.n;
  if (w.invariant != n)
    throw Error("CertificateFailed", "class invariant disagrees with n");
  return w;
}

DetCurve det_curve(const Field& F, const Delta0Rep& f) {
  check_shape(f);
  if (f.dims[0] != f.dims[1])
    throw Error("InvalidArgument", "determinant needs square arrow matrices");
  int n = f.dims[0];
  DetCurve out;
  if (n == 0) {
    out.form = form_zero(F, 0);
    out.form.coeffs[0] = F.one();
    return out;
  }
  // entries are the linear forms sum_g coord_g * arr[g][i][j]; expand the
  // determinant by minors over column subsets
  auto entry = [&](int i, int j) {
    TernaryForm e = form_zero(F, 1);
    for (int g = 0; g < 3; ++g) e.coeffs[g] = f.arr[g].at(i, j);
    // monomial order of degree 1 is x, y, z which matches g = 0, 1, 2
    return e;
  };
  // minors[mask] = det of rows 0..popcount-1, columns in mask
  std::vector<TernaryForm> minors(1u << n);
  minors[0] = form_zero(F, 0);
  minors[0].coeffs[0] = F.one();
  for (unsigned mask = 1; mask < minors.size(); ++mask) {
    int r = __builtin_popcount(mask);
    TernaryForm acc = form_zero(F, r);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      TernaryForm term = form_mul(F, entry(r - 1, j), minors[mask & ~(1u << j)]);
      // expansion along row r-1: sign (-1)^{(r-1)+pos}
      acc = form_add(F, acc,
                     ((r - 1 + pos) % 2 == 0) ? term
                                              : form_scale(F, F.neg(F.one()), term));
      ++pos;
    }
    minors[mask] = acc;
  }
  out.form = minors[(1u << n) - 1];
  out.identically_zero = out.form.is_zero(F);
  return out;
}

SampleResult sample_Dn(const Geometry& geom, int n, std::uint64_t seed,
                       int max_tries) {
  if (n < 1) throw Error("InvalidArgument", "sampling needs n >= 1");
  const Field& F = geom.field;
  if (!F.is_prime_field())
    throw Error("FieldNotFinite", "sampling enumerates curve points");
  std::vector<DeltaRep> preps;
  for (const auto& p : geom.enumerate_points()) preps.push_back(point_rep(geom, p));

  std::mt19937_64 rng(seed);
  SampleResult res;
  res.rep.dims = {n, n};
  for (int t = 1; t <= max_tries; ++t) {
    for (int g = 0; g < 3; ++g) {
      Matrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = F.random(rng);
      res.rep.arr[g] = std::move(m);
    }
    res.cert = membership_check_Dn(F, geom.rel, res.rep, preps, true);
    res.tries = t;
    if (res.cert.pass) return res;
  }
  throw Error("BudgetExceeded", "no membership witness found in the try budget");
}

}  // namespace skly3
