#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "skly3/json_io.hpp"

using namespace skly3;

namespace {

struct CommonOpts {
  long fp = 0;            // 0 means rationals
  std::string field;      // "q" or "fp"
  bool rational = false;
  std::string a = "1", b = "2", c = "3";
  int maxdeg = 8;
  std::uint64_t seed = 0;
  std::string out;
  bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--fp", o.fp, "prime field F_p");
  cmd->add_option("--field", o.field, "'q' for the rationals, 'fp' with --fp");
  cmd->add_flag("--rationals", o.rational, "work over Q");
  cmd->add_option("--a", o.a, "parameter a");
  cmd->add_option("--b", o.b, "parameter b");
  cmd->add_option("--c", o.c, "parameter c");
  cmd->add_option("--maxdeg", o.maxdeg, "degree cutoff for algebra tables");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--out", o.out, "write the JSON report to this file");
  cmd->add_flag("--pretty", o.pretty, "indent the JSON output");
}

Field make_field(const CommonOpts& o) {
  bool wants_q = o.rational || o.field == "q";
  if (!o.field.empty() && o.field != "q" && o.field != "fp")
    throw Error("InvalidArgument", "--field must be 'q' or 'fp'");
  if (o.field == "fp" && o.fp == 0)
    throw Error("InvalidArgument", "--field fp needs --fp <prime>");
  if (o.fp != 0 && wants_q)
    throw Error("InvalidArgument", "--fp and --field q are mutually exclusive");
  if (o.fp != 0) return Field(FieldSpec::fp(o.fp));
  return Field(FieldSpec::rationals());
}

SklyParams make_params(const Field& F, const CommonOpts& o) {
  SklyParams p{F.parse(o.a), F.parse(o.b), F.parse(o.c)};
  validate_params(F, p);
  return p;
}

std::array<Scalar, 3> parse_triple(const Field& F, const std::string& s) {
  std::array<Scalar, 3> out;
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t next = i < 2 ? s.find(',', pos) : s.size();
    if (next == std::string::npos)
      throw Error("ParseError", "expected three comma-separated scalars");
    out[i] = F.parse(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stoll(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("ParseError", e.what());
  }
  return j;
}

void emit(const Json& j, const CommonOpts& o) {
  std::string text = o.pretty ? j.dump(2) : j.dump();
  text += "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw Error("ParseError", "cannot write " + o.out);
    f << text;
  }
}

void stamp(Json& j, const CommonOpts& o) { j["seed"] = o.seed; }

int thread_cap() {
  // computations are sequential; the env var is validated and recorded so
  // configs stay portable
  const char* env = std::getenv("SKLY3_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  if (v < 1) throw Error("InvalidArgument", "SKLY3_THREADS must be a positive integer");
  return v;
}

std::vector<DeltaRep> all_point_reps(const Geometry& geom) {
  std::vector<DeltaRep> reps;
  for (const auto& p : geom.enumerate_points()) reps.push_back(point_rep(geom, p));
  return reps;
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations around rank-one module moduli for "
               "three-dimensional Sklyanin algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string point_str, u_str, rep_path, rep2_path, dims_str, d1_str, d2_str;
  std::string emit_rep_path;
  int n = 1, bound = 2, power = 1, shift_l = 0;
  bool inverse = false, verify = false, do_normalize = false, with_stability = false;

  auto* c_algebra = app.add_subcommand("algebra", "dimension table, central element, quotient dims");
  add_common(c_algebra, o);
  auto* c_curve = app.add_subcommand("curve", "the cubic divisor of the parameters");
  add_common(c_curve, o);
  auto* c_sigma = app.add_subcommand("sigma", "translation automorphism on curve points");
  add_common(c_sigma, o);
  c_sigma->add_option("--point", point_str, "comma-separated coordinates")->required(false);
  c_sigma->add_flag("--inverse", inverse, "apply the inverse");
  c_sigma->add_option("--power", power, "iterate this many times (may be negative)");
  c_sigma->add_flag("--verify", verify, "round-trip check over all curve points");
  auto* c_points = app.add_subcommand("points", "enumerate curve points over F_p");
  add_common(c_points, o);
  auto* c_pointrep = app.add_subcommand("pointrep", "quiver rep of a curve point");
  add_common(c_pointrep, o);
  c_pointrep->add_option("--point", point_str)->required();
  auto* c_lineobj = app.add_subcommand("lineobj", "quiver rep of a line object");
  add_common(c_lineobj, o);
  c_lineobj->add_option("--u", u_str, "linear form coordinates")->required();
  auto* c_construct = app.add_subcommand("construct", "build a rank-one ideal witness");
  add_common(c_construct, o);
  c_construct->add_option("--n", n, "invariant")->required();
  c_construct->add_option("--emit-rep", emit_rep_path, "also write the bare rep file");
  auto* c_check = app.add_subcommand("check", "validate a rep file and certify membership");
  add_common(c_check, o);
  c_check->add_option("--rep", rep_path)->required();
  c_check->add_flag("--stability", with_stability, "also run the exhaustive stability check");
  auto* c_hom = app.add_subcommand("hom", "hom spaces between two rep files");
  add_common(c_hom, o);
  c_hom->add_option("--rep1", rep_path)->required();
  c_hom->add_option("--rep2", rep2_path)->required();
  auto* c_ext = app.add_subcommand("ext", "ext dimensions between two rep files");
  add_common(c_ext, o);
  c_ext->add_option("--rep1", rep_path)->required();
  c_ext->add_option("--rep2", rep2_path)->required();
  auto* c_kclass = app.add_subcommand("kclass", "K-class from a Hilbert series");
  add_common(c_kclass, o);
  c_kclass->add_option("--dims", dims_str, "comma-separated dimensions from degree 0")->required();
  c_kclass->add_option("--bound", bound, "degree where the third difference must settle");
  c_kclass->add_option("--shift", shift_l, "also report the class shifted by l");
  c_kclass->add_flag("--normalize", do_normalize, "normalize and report the invariant");
  auto* c_serre = app.add_subcommand("serre-check", "pairing symmetry on the K-basis");
  add_common(c_serre, o);
  auto* c_euler = app.add_subcommand("euler", "Euler form on dimension vectors");
  add_common(c_euler, o);
  c_euler->add_option("--d1", d1_str)->required();
  c_euler->add_option("--d2", d2_str)->required();
  auto* c_sample = app.add_subcommand("sample", "rejection-sample a membership witness");
  add_common(c_sample, o);
  c_sample->add_option("--n", n)->required();

  CLI11_PARSE(app, argc, argv);
  thread_cap();

  Field F = make_field(o);

  if (c_algebra->parsed()) {
    SklyParams par = make_params(F, o);
    AlgebraTable T = build_algebra(F, par, o.maxdeg);
    std::vector<Scalar> g = find_central_cubic(T);
    Json j = algebra_to_json(T, g);
    CyclicModuleTable B = cyclic_quotient(T, 3, g, QuotientSide::RightQuotient);
    j["bdims"] = B.dims;
    stamp(j, o);
    emit(j, o);
  } else if (c_curve->parsed()) {
    SklyParams par = make_params(F, o);
    Geometry geom(F, par);
    Json j = form_to_json(F, geom.cubic);
    j["field"] = field_to_json(F.spec());
    stamp(j, o);
    emit(j, o);
  } else if (c_sigma->parsed()) {
    Geometry geom(F, make_params(F, o));
    Json j;
    if (verify) {
      int checked = 0, failures = 0;
      for (const auto& p : geom.enumerate_points()) {
        ++checked;
        if (!(geom.sigma_inverse(geom.sigma(p)) == p) ||
            !(geom.sigma(geom.sigma_inverse(p)) == p))
          ++failures;
      }
      j["checked"] = checked;
      j["failures"] = failures;
      j["pass"] = failures == 0;
    } else {
      if (point_str.empty()) throw Error("InvalidArgument", "--point or --verify required");
      CurvePoint p = CurvePoint::from_coords(F, parse_triple(F, point_str));
      long long e = inverse ? -static_cast<long long>(power) : power;
      j["point"] = point_to_json(F, p);
      j["power"] = e;
      j["image"] = point_to_json(F, geom.sigma_pow(p, e));
    }
    stamp(j, o);
    emit(j, o);
  } else if (c_points->parsed()) {
    Geometry geom(F, make_params(F, o));
    auto pts = geom.enumerate_points();
    Json j;
    j["count"] = pts.size();
    double sq = 2 * std::sqrt(static_cast<double>(F.p()));
    j["hasse_window"] = Json::array(
        {static_cast<long long>(std::ceil(F.p() + 1 - sq)),
         static_cast<long long>(std::floor(F.p() + 1 + sq))});
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(F, p));
    j["points"] = std::move(arr);
    stamp(j, o);
    emit(j, o);
  } else if (c_pointrep->parsed()) {
    Geometry geom(F, make_params(F, o));
    CurvePoint p = CurvePoint::from_coords(F, parse_triple(F, point_str));
    if (!geom.on_curve(p)) throw Error("NotOnCurve", "pointrep needs a curve point");
    Json j = rep_to_json(F, point_rep(geom, p));
    stamp(j, o);
    emit(j, o);
  } else if (c_lineobj->parsed()) {
    SklyParams par = make_params(F, o);
    AlgebraTable T = build_algebra(F, par, std::max(o.maxdeg, 3));
    auto u = parse_triple(F, u_str);
    Json j = rep_to_json(F, line_object_rep(T, {u[0], u[1], u[2]}));
    stamp(j, o);
    emit(j, o);
  } else if (c_construct->parsed()) {
    SklyParams par = make_params(F, o);
    int need = n + 7;
    if (o.maxdeg < need) {
      std::cerr << "[warn] raising --maxdeg to " << need << " for n=" << n << "\n";
      o.maxdeg = need;
    }
    AlgebraTable T = build_algebra(F, par, o.maxdeg);
    IdealWitness w = construct_ideal_rep(T, n, o.seed);
    Geometry geom(F, par);
    MembershipCertificate cert;
    if (F.is_prime_field())
      cert = membership_check_Dn(F, T.rel, res(w.rep), all_point_reps(geom), true);
    Json j = witness_to_json(F, w);
    Json par_j;
    par_j["a"] = F.str(par.a);
    par_j["b"] = F.str(par.b);
    par_j["c"] = F.str(par.c);
    j["params"] = std::move(par_j);
    j["field"] = field_to_json(F.spec());
    if (F.is_prime_field()) j["certificate"] = certificate_to_json(F, cert);
    stamp(j, o);
    emit(j, o);
    if (!emit_rep_path.empty()) {
      std::ofstream f(emit_rep_path);
      f << rep_to_json(F, w.rep).dump(2) << "\n";
    }
  } else if (c_check->parsed()) {
    RepFile rf = rep_from_json(load_json(rep_path));
    Field RF(rf.field);
    SklyParams par{RF.parse(o.a), RF.parse(o.b), RF.parse(o.c)};
    validate_params(RF, par);
    RelationTensor rel = RelationTensor::from_params(par);
    Json j;
    Delta0Rep f0;
    if (rf.is_delta) {
      j["relations_ok"] = rep_is_valid(RF, rel, rf.delta);
      f0 = res(rf.delta);
    } else {
      f0 = rf.delta0;
    }
    Geometry geom(RF, par);
    j["certificate"] = certificate_to_json(
        RF, membership_check_Dn(RF, rel, f0, all_point_reps(geom), true));
    if (with_stability) {
      StabilityReport sr = stability_check(RF, f0, StabilityMode::Exhaustive);
      Json s;
      s["verdict"] = sr.verdict == StabilityVerdict::Stable ? "stable"
                     : sr.verdict == StabilityVerdict::SemistableNotStable
                         ? "semistable"
                         : "unstable";
      s["subspaces_checked"] = sr.subspaces_checked;
      j["stability"] = std::move(s);
    }
    stamp(j, o);
    emit(j, o);
  } else if (c_hom->parsed()) {
    RepFile r1 = rep_from_json(load_json(rep_path));
    RepFile r2 = rep_from_json(load_json(rep2_path));
    if (r1.field != r2.field) throw Error("InvalidField", "rep files over different fields");
    if (r1.is_delta != r2.is_delta)
      throw Error("InvalidArgument", "rep files over different quivers");
    Field RF(r1.field);
    Json j;
    if (r1.is_delta) {
      j["hom_1_2"] = hom_space(RF, r1.delta, r2.delta).dim;
      j["hom_2_1"] = hom_space(RF, r2.delta, r1.delta).dim;
    } else {
      j["hom_1_2"] = hom_space(RF, r1.delta0, r2.delta0).dim;
      j["hom_2_1"] = hom_space(RF, r2.delta0, r1.delta0).dim;
    }
    stamp(j, o);
    emit(j, o);
  } else if (c_ext->parsed()) {
    RepFile r1 = rep_from_json(load_json(rep_path));
    RepFile r2 = rep_from_json(load_json(rep2_path));
    if (!r1.is_delta || !r2.is_delta)
      throw Error("InvalidArgument", "ext needs three-vertex rep files");
    if (r1.field != r2.field) throw Error("InvalidField", "rep files over different fields");
    Field RF(r1.field);
    SklyParams par{RF.parse(o.a), RF.parse(o.b), RF.parse(o.c)};
    validate_params(RF, par);
    auto e = ext_dims(RF, RelationTensor::from_params(par), r1.delta, r2.delta);
    Json j;
    j["ext"] = e;
    j["euler"] = euler_form_quiver(r1.delta.dims, r2.delta.dims);
    stamp(j, o);
    emit(j, o);
  } else if (c_kclass->parsed()) {
    KClass c = class_from_hilbert(parse_int_list(dims_str), bound);
    Json j = kclass_to_json(c);
    if (shift_l != 0) j["shifted"] = kclass_to_json(shift_class(c, shift_l));
    if (do_normalize) {
      NormalizedClass nc = normalize_and_invariant(c);
      j["normalized"] = kclass_to_json(nc.normalized);
      j["invariant"] = nc.n;
    }
    stamp(j, o);
    emit(j, o);
  } else if (c_serre->parsed()) {
    SerrePairingReport rep = serre_pairing_check();
    Json j;
    j["pass"] = rep.pass;
    Json rows = Json::array();
    for (const auto& r : rep.rows)
      rows.push_back(Json::array({r[0], r[1], r[2], r[3]}));
    j["rows"] = std::move(rows);
    stamp(j, o);
    emit(j, o);
  } else if (c_euler->parsed()) {
    auto d1 = parse_int_list(d1_str), d2 = parse_int_list(d2_str);
    if (d1.size() != 3 || d2.size() != 3)
      throw Error("InvalidArgument", "dimension vectors need three entries");
    Json j;
    j["euler"] = euler_form_quiver(
        {static_cast<int>(d1[0]), static_cast<int>(d1[1]), static_cast<int>(d1[2])},
        {static_cast<int>(d2[0]), static_cast<int>(d2[1]), static_cast<int>(d2[2])});
    stamp(j, o);
    emit(j, o);
  } else if (c_sample->parsed()) {
    Geometry geom(F, make_params(F, o));
    SampleResult sres = sample_Dn(geom, n, o.seed);
    Json j;
    j["tries"] = sres.tries;
    j["certificate"] = certificate_to_json(F, sres.cert);
    j["rep"] = rep_to_json(F, sres.rep);
    stamp(j, o);
    emit(j, o);
  }
  return 0;
}

bool is_internal(const std::string& code) {
  return code == "InternalInvariant" || code == "EulerMismatch" ||
         code == "CertificateFailed" || code == "DimensionMismatch" ||
         code == "NoCentralCubic" || code == "CenterTooBig";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    Json j;
    j["error"] = e.code();
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return is_internal(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"Unhandled\",\"message\":\"" << e.what() << "\"}\n";
    return 1;
  }
}
