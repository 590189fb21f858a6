#pragma once

#include <json.hpp>

#include "skly3/moduli.hpp"

namespace skly3 {

// ordered_json keeps insertion order so repeated runs emit byte-identical
// documents
using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& fs);
FieldSpec field_from_json(const Json& j);

Json matrix_to_json(const Field& F, const Matrix& m);
Matrix matrix_from_json(const Field& F, const Json& j);

Json point_to_json(const Field& F, const CurvePoint& p);
CurvePoint point_from_json(const Field& F, const Json& j);

Json form_to_json(const Field& F, const TernaryForm& f);
TernaryForm form_from_json(const Field& F, const Json& j);

struct RepFile {
  bool is_delta = false;
  DeltaRep delta;
  Delta0Rep delta0;
  FieldSpec field = FieldSpec::rationals();
};

Json rep_to_json(const Field& F, const DeltaRep& r);
Json rep_to_json(const Field& F, const Delta0Rep& r);
RepFile rep_from_json(const Json& j);

Json kclass_to_json(const KClass& c);
KClass kclass_from_json(const Json& j);

Json certificate_to_json(const Field& F, const MembershipCertificate& c);
Json witness_to_json(const Field& F, const IdealWitness& w);

Json algebra_to_json(const AlgebraTable& T, const std::vector<Scalar>& g);

}  // namespace skly3
