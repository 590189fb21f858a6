#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skly3/json_io.hpp"

namespace py = pybind11;
using namespace skly3;

namespace {

// p = 0 selects the rationals
Field make_field(long p) {
  return p == 0 ? Field(FieldSpec::rationals()) : Field(FieldSpec::fp(p));
}

SklyParams make_params(const Field& F, const std::string& a, const std::string& b,
                       const std::string& c) {
  SklyParams par{F.parse(a), F.parse(b), F.parse(c)};
  validate_params(F, par);
  return par;
}

std::string algebra_report(const std::string& a, const std::string& b,
                           const std::string& c, long p, int maxdeg) {
  Field F = make_field(p);
  AlgebraTable T = build_algebra(F, make_params(F, a, b, c), maxdeg);
  std::vector<Scalar> g = find_central_cubic(T);
  Json j = algebra_to_json(T, g);
  CyclicModuleTable B = cyclic_quotient(T, 3, g, QuotientSide::RightQuotient);
  j["bdims"] = B.dims;
  return j.dump();
}

std::string curve_report(const std::string& a, const std::string& b,
                         const std::string& c, long p) {
  Field F = make_field(p);
  Geometry geom(F, make_params(F, a, b, c));
  return form_to_json(F, geom.cubic).dump();
}

std::string points_report(const std::string& a, const std::string& b,
                          const std::string& c, long p) {
  Field F = make_field(p);
  Geometry geom(F, make_params(F, a, b, c));
  Json arr = Json::array();
  for (const auto& pt : geom.enumerate_points()) arr.push_back(point_to_json(F, pt));
  Json j;
  j["count"] = arr.size();
  j["points"] = std::move(arr);
  return j.dump();
}

std::string construct_report(const std::string& a, const std::string& b,
                             const std::string& c, long p, int n,
                             std::uint64_t seed) {
  Field F = make_field(p);
  SklyParams par = make_params(F, a, b, c);
  AlgebraTable T = build_algebra(F, par, n + 7);
  IdealWitness w = construct_ideal_rep(T, n, seed);
  Json j = witness_to_json(F, w);
  if (F.is_prime_field()) {
    Geometry geom(F, par);
    std::vector<DeltaRep> preps;
    for (const auto& pt : geom.enumerate_points()) preps.push_back(point_rep(geom, pt));
    j["certificate"] = certificate_to_json(
        F, membership_check_Dn(F, T.rel, res(w.rep), preps, true));
  }
  return j.dump();
}

std::string check_rep(const std::string& rep_json, const std::string& a,
                      const std::string& b, const std::string& c) {
  RepFile rf = rep_from_json(Json::parse(rep_json));
  Field F(rf.field);
  SklyParams par = make_params(F, a, b, c);
  RelationTensor rel = RelationTensor::from_params(par);
  Json j;
  Delta0Rep f0 = rf.is_delta ? res(rf.delta) : rf.delta0;
  if (rf.is_delta) j["relations_ok"] = rep_is_valid(F, rel, rf.delta);
  Geometry geom(F, par);
  std::vector<DeltaRep> preps;
  for (const auto& pt : geom.enumerate_points()) preps.push_back(point_rep(geom, pt));
  j["certificate"] =
      certificate_to_json(F, membership_check_Dn(F, rel, f0, preps, true));
  return j.dump();
}

std::string ext_report(const std::string& rep1_json, const std::string& rep2_json,
                       const std::string& a, const std::string& b,
                       const std::string& c) {
  RepFile r1 = rep_from_json(Json::parse(rep1_json));
  RepFile r2 = rep_from_json(Json::parse(rep2_json));
  if (!r1.is_delta || !r2.is_delta)
    throw Error("InvalidArgument", "ext needs three-vertex reps");
  Field F(r1.field);
  SklyParams par = make_params(F, a, b, c);
  auto e = ext_dims(F, RelationTensor::from_params(par), r1.delta, r2.delta);
  Json j;
  j["ext"] = e;
  j["euler"] = euler_form_quiver(r1.delta.dims, r2.delta.dims);
  return j.dump();
}

std::string kclass_report(const std::vector<long long>& dims, int bound) {
  KClass c = class_from_hilbert(dims, bound);
  Json j = kclass_to_json(c);
  if (c.r == 1) {
    NormalizedClass nc = normalize_and_invariant(c);
    j["normalized"] = kclass_to_json(nc.normalized);
    j["invariant"] = nc.n;
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_skly3, m) {
  m.doc() = "exact computations around rank-one module moduli for "
            "three-dimensional Sklyanin algebras; reports are JSON strings";

  py::register_exception<Error>(m, "Skly3Error");

  m.def("algebra_report", &algebra_report, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("p") = 0, py::arg("maxdeg") = 8);
  m.def("curve_report", &curve_report, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("p") = 0);
  m.def("points_report", &points_report, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("p"));
  m.def("construct_report", &construct_report, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("p"), py::arg("n"), py::arg("seed") = 0);
  m.def("check_rep", &check_rep, py::arg("rep_json"), py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def("ext_report", &ext_report, py::arg("rep1_json"), py::arg("rep2_json"),
        py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("kclass_report", &kclass_report, py::arg("dims"), py::arg("bound") = 2);
  m.def("serre_report", [] {
    SerrePairingReport rep = serre_pairing_check();
    Json j;
    j["pass"] = rep.pass;
    return j.dump();
  });
  m.def("euler_form", [](std::array<int, 3> d1, std::array<int, 3> d2) {
    return euler_form_quiver(d1, d2);
  });
}
