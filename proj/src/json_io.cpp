#include "skly3/json_io.hpp"

namespace skly3 {

Json field_to_json(const FieldSpec& fs) {
  Json j;
  if (fs.kind == FieldSpec::Kind::Prime) {
    j["field"] = "fp";
    j["p"] = fs.p;
  } else {
    j["field"] = "q";
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  if (!j.contains("field")) throw Error("ParseError", "missing field spec");
  std::string k = j["field"].get<std::string>();
  if (k == "fp") return FieldSpec::fp(j.at("p").get<long>());
  if (k == "q") return FieldSpec::rationals();
  throw Error("ParseError", "unknown field kind '" + k + "'");
}

Json matrix_to_json(const Field& F, const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(F.str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Field& F, const Json& j) {
  if (!j.is_array()) throw Error("ParseError", "matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw Error("ParseError", "ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = F.parse(j[i][c].get<std::string>());
  }
  return m;
}

Json point_to_json(const Field& F, const CurvePoint& p) {
  return Json::array({F.str(p.c[0]), F.str(p.c[1]), F.str(p.c[2])});
}

CurvePoint point_from_json(const Field& F, const Json& j) {
  if (!j.is_array() || j.size() != 3)
    throw Error("ParseError", "point must be a 3-element array");
  std::array<Scalar, 3> raw;
  for (int i = 0; i < 3; ++i) raw[i] = F.parse(j[i].get<std::string>());
  return CurvePoint::from_coords(F, raw);
}

Json form_to_json(const Field& F, const TernaryForm& f) {
  Json j;
  j["degree"] = f.degree;
  Json coeffs;
  auto mons = TernaryForm::monomials(f.degree);
  for (size_t t = 0; t < mons.size(); ++t)
    coeffs[TernaryForm::monomial_name(mons[t])] = F.str(f.coeffs[t]);
  j["coeffs"] = std::move(coeffs);
  return j;
}

TernaryForm form_from_json(const Field& F, const Json& j) {
  TernaryForm f;
  f.degree = j.at("degree").get<int>();
  auto mons = TernaryForm::monomials(f.degree);
  f.coeffs.assign(mons.size(), F.zero());
  const Json& coeffs = j.at("coeffs");
  for (size_t t = 0; t < mons.size(); ++t) {
    std::string name = TernaryForm::monomial_name(mons[t]);
    if (coeffs.contains(name)) f.coeffs[t] = F.parse(coeffs[name].get<std::string>());
  }
  return f;
}

Json rep_to_json(const Field& F, const DeltaRep& r) {
  Json j;
  j["quiver"] = "delta";
  j["dims"] = r.dims;
  Json maps;
  const char* names2[3] = {"Xm2", "Ym2", "Zm2"};
  const char* names1[3] = {"Xm1", "Ym1", "Zm1"};
  for (int g = 0; g < 3; ++g) maps[names2[g]] = matrix_to_json(F, r.arr2[g]);
  for (int g = 0; g < 3; ++g) maps[names1[g]] = matrix_to_json(F, r.arr1[g]);
  j["maps"] = std::move(maps);
  j["field"] = field_to_json(F.spec());
  return j;
}

Json rep_to_json(const Field& F, const Delta0Rep& r) {
  Json j;
  j["quiver"] = "delta0";
  j["dims"] = r.dims;
  Json maps;
  const char* names[3] = {"X", "Y", "Z"};
  for (int g = 0; g < 3; ++g) maps[names[g]] = matrix_to_json(F, r.arr[g]);
  j["maps"] = std::move(maps);
  j["field"] = field_to_json(F.spec());
  return j;
}

namespace {

// JSON cannot distinguish 0 x n from n x 0, so restore the shape dims imply
Matrix with_shape(Matrix m, int r, int c) {
  if (m.rows() == r && m.cols() == c) return m;
  if (m.rows() * m.cols() == 0 && r * c == 0) return Matrix(r, c);
  throw Error("ParseError", "matrix shape disagrees with dims");
}

}  // namespace

RepFile rep_from_json(const Json& j) {
  RepFile out;
  out.field = field_from_json(j.at("field"));
  Field F(out.field);
  std::string q = j.at("quiver").get<std::string>();
  const Json& maps = j.at("maps");
  if (q == "delta") {
    out.is_delta = true;
    auto d = j.at("dims").get<std::vector<int>>();
    if (d.size() != 3) throw Error("ParseError", "delta rep needs 3 dims");
    out.delta.dims = {d[0], d[1], d[2]};
    const char* names2[3] = {"Xm2", "Ym2", "Zm2"};
    const char* names1[3] = {"Xm1", "Ym1", "Zm1"};
    for (int g = 0; g < 3; ++g) {
      out.delta.arr2[g] = with_shape(matrix_from_json(F, maps.at(names2[g])), d[1], d[0]);
      out.delta.arr1[g] = with_shape(matrix_from_json(F, maps.at(names1[g])), d[2], d[1]);
    }
    check_shape(out.delta);
  } else if (q == "delta0") {
    auto d = j.at("dims").get<std::vector<int>>();
    if (d.size() != 2) throw Error("ParseError", "delta0 rep needs 2 dims");
    out.delta0.dims = {d[0], d[1]};
    const char* names[3] = {"X", "Y", "Z"};
    for (int g = 0; g < 3; ++g)
      out.delta0.arr[g] = with_shape(matrix_from_json(F, maps.at(names[g])), d[1], d[0]);
    check_shape(out.delta0);
  } else {
    throw Error("ParseError", "unknown quiver '" + q + "'");
  }
  return out;
}

Json kclass_to_json(const KClass& c) {
  Json j;
  j["r"] = c.r;
  j["a"] = c.a;
  j["b"] = c.b;
  return j;
}

KClass kclass_from_json(const Json& j) {
  return {j.at("r").get<long long>(), j.at("a").get<long long>(),
          j.at("b").get<long long>()};
}

Json certificate_to_json(const Field& F, const MembershipCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["dims_ok"] = c.dims_ok;
  Json hv;
  hv["checked_points"] = c.checked_points;
  hv["failures"] = c.hom_failures;
  j["hom_vanishing"] = std::move(hv);
  j["rank_M"] = c.rank_m;
  j["expected_rank_M"] = c.expected_rank_m;
  j["verdict"] = c.pass ? "member" : "not_member";
  j["field"] = field_to_json(F.spec());
  j["mode"] = c.enumerated ? "enumerated" : "sampled";
  return j;
}

Json witness_to_json(const Field& F, const IdealWitness& w) {
  Json j;
  j["n"] = w.n;
  j["seed"] = w.seed;
  j["attempts"] = w.attempts;
  Json u = Json::array();
  for (const auto& c : w.u) u.push_back(F.str(c));
  j["u"] = std::move(u);
  Json s = Json::array();
  for (const auto& c : w.s) s.push_back(F.str(c));
  j["s"] = std::move(s);
  Json cert = Json::array();
  for (const auto& row : w.certificate) {
    Json r;
    r["d"] = row.d;
    r["rank"] = row.rank;
    r["expected"] = row.expected;
    cert.push_back(std::move(r));
  }
  j["rank_certificate"] = std::move(cert);
  j["rep"] = rep_to_json(F, w.rep);
  Json coh = Json::array();
  for (const auto& row : w.cohomology) {
    Json r;
    r["l"] = row.l;
    r["h0"] = row.h0;
    r["h1"] = row.h1;
    coh.push_back(std::move(r));
  }
  j["cohomology"] = std::move(coh);
  j["ideal_hilbert"] = w.ideal_hilbert;
  j["kclass"] = kclass_to_json(w.kclass);
  j["invariant"] = w.invariant;
  return j;
}

Json algebra_to_json(const AlgebraTable& T, const std::vector<Scalar>& g) {
  const Field& F = T.field;
  Json j;
  Json par;
  par["a"] = F.str(T.params.a);
  par["b"] = F.str(T.params.b);
  par["c"] = F.str(T.params.c);
  j["params"] = std::move(par);
  j["field"] = field_to_json(F.spec());
  j["dims"] = T.dims;
  const char* names[3] = {"x", "y", "z"};
  Json rmul, lmul;
  for (int gidx = 0; gidx < 3; ++gidx) {
    Json rs = Json::array(), ls = Json::array();
    for (int d = 0; d + 1 <= T.max_deg; ++d) {
      rs.push_back(matrix_to_json(F, T.rmul_gen(gidx, d)));
      ls.push_back(matrix_to_json(F, T.lmul_gen(gidx, d)));
    }
    rmul[names[gidx]] = std::move(rs);
    lmul[names[gidx]] = std::move(ls);
  }
  j["rmul"] = std::move(rmul);
  j["lmul"] = std::move(lmul);
  Json gj = Json::array();
  for (const auto& c : g) gj.push_back(F.str(c));
  j["g"] = std::move(gj);
  return j;
}

}  // namespace skly3
