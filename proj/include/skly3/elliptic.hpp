#pragma once

#include <string>
#include <vector>

#include "skly3/quiver.hpp"

namespace skly3 {

// Homogeneous form in x, y, z. Coefficients are stored in the monomial order
// produced by monomials(degree): x-exponent descending, then y descending.
struct TernaryForm {
  int degree = 0;
  std::vector<Scalar> coeffs;

  static std::vector<std::array<int, 3>> monomials(int degree);
  static std::string monomial_name(const std::array<int, 3>& m);
  static int monomial_index(int degree, const std::array<int, 3>& m);

  Scalar eval(const Field& F, const std::array<Scalar, 3>& p) const;
  bool is_zero(const Field& F) const;
};

// Point of P^2 with the first nonzero coordinate normalized to 1.
struct CurvePoint {
  std::array<Scalar, 3> c;

  static CurvePoint from_coords(const Field& F, const std::array<Scalar, 3>& raw);
  bool operator==(const CurvePoint& o) const { return c == o.c; }
};

TernaryForm form_zero(const Field& F, int degree);
TernaryForm form_add(const Field& F, const TernaryForm& f, const TernaryForm& g);
TernaryForm form_scale(const Field& F, const Scalar& c, const TernaryForm& f);
TernaryForm form_mul(const Field& F, const TernaryForm& f, const TernaryForm& g);

// N(p): the 3x3 matrix with N(p)_{kj} = sum_i lam^k_{ij} p_i, so that the
// relation k evaluated on the pair of points (p, q) is (N(p) q)_k.
Matrix multilinearized_matrix(const Field& F, const RelationTensor& rel,
                              const std::array<Scalar, 3>& p);
// The companion with the roles swapped: N'(q)_{ki} = sum_j lam^k_{ij} q_j.
Matrix companion_matrix(const Field& F, const RelationTensor& rel,
                        const std::array<Scalar, 3>& q);

// det N(p) expanded as a cubic form; throws LinearCase if it vanishes
// identically.
TernaryForm curve_equation(const Field& F, const RelationTensor& rel);

struct Geometry {
  Field field;
  SklyParams params;
  RelationTensor rel;
  TernaryForm cubic;

  Geometry(const Field& F, const SklyParams& par);

  bool on_curve(const CurvePoint& p) const;
  // kernel direction of N(p); 1-dimensional on the curve or DegenerateKernel
  CurvePoint sigma(const CurvePoint& p) const;
  CurvePoint sigma_inverse(const CurvePoint& p) const;
  CurvePoint sigma_pow(const CurvePoint& p, long long u) const;
  // all points of the curve over a prime field (FieldNotFinite otherwise)
  std::vector<CurvePoint> enumerate_points() const;
};

// Coordinate rows lambda^{(u)} of sigma^u(p) for u in [d0, d1].
std::vector<std::array<Scalar, 3>> point_module(const Geometry& geom,
                                                const CurvePoint& p, long long d0,
                                                long long d1);

// Dims (1,1,1) rep of a curve point: level -2 arrows carry sigma^{-2}(p),
// level -1 arrows sigma^{-1}(p).
DeltaRep point_rep(const Geometry& geom, const CurvePoint& p);

}  // namespace skly3
