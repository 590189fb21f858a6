#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skly3/algebra.hpp"

namespace skly3 {

// Representation of the three-vertex quiver (vertices -2, -1, 0, triple
// arrows between consecutive vertices, Sklyanin relations). arr2[g] is the
// arrow at -2 -> -1 for generator g, arr1[g] the arrow at -1 -> 0. A path
// "first alpha then beta" acts as matrix(beta) * matrix(alpha).
struct DeltaRep {
  std::array<int, 3> dims;  // (d_{-2}, d_{-1}, d_0)
  std::array<Matrix, 3> arr2, arr1;
};

// Representation of the full subquiver on vertices -2, -1 (no relations).
struct Delta0Rep {
  std::array<int, 2> dims;
  std::array<Matrix, 3> arr;
};

void check_shape(const DeltaRep& r);
void check_shape(const Delta0Rep& r);

// The three relation residual matrices; all zero iff the rep satisfies the
// quiver relations.
std::array<Matrix, 3> validate_rep(const Field& F, const RelationTensor& rel,
                                   const DeltaRep& r);
bool rep_is_valid(const Field& F, const RelationTensor& rel, const DeltaRep& r);

struct HomSpace {
  int dim;
  // each basis element is the concatenated vectorization of the per-vertex maps
  std::vector<std::vector<Scalar>> basis;
};

HomSpace hom_space(const Field& F, const DeltaRep& r1, const DeltaRep& r2);
HomSpace hom_space(const Field& F, const Delta0Rep& r1, const Delta0Rep& r2);

// Whether some intertwiner is invertible at every vertex (dims must match).
bool reps_isomorphic(const Field& F, const DeltaRep& r1, const DeltaRep& r2);

// Euler form of the quiver with relations on dimension vectors.
long long euler_form_quiver(const std::array<int, 3>& d1, const std::array<int, 3>& d2);

// (h0, h1, h2) of the relation-derivative complex; throws EulerMismatch if the
// alternating sum disagrees with euler_form_quiver.
std::array<int, 3> ext_dims(const Field& F, const RelationTensor& rel,
                            const DeltaRep& r1, const DeltaRep& r2);

Delta0Rep res(const DeltaRep& r);

// The relation-induced map V_{-2}^3 -> V_{-1}^3 obtained by substituting the
// rep's matrices into the relation presentation; its corank computes
// dim(Ind F)_0.
Matrix big_matrix(const Field& F, const RelationTensor& rel, const Delta0Rep& f);

DeltaRep ind(const Field& F, const RelationTensor& rel, const Delta0Rep& f);

enum class StabilityVerdict { Stable, SemistableNotStable, Unstable };
enum class StabilityMode { Exhaustive, Sampled };

struct StabilityReport {
  StabilityVerdict verdict;
  bool exhaustive;
  long long subspaces_checked;
  // destabilizing / strictly-semistable witness subspace U (rows = basis), if any
  std::optional<Matrix> witness;
};

StabilityReport stability_check(const Field& F, const Delta0Rep& f,
                                StabilityMode mode, std::mt19937_64* rng = nullptr,
                                int samples = 200);

struct MembershipCertificate {
  int n = 0;
  bool dims_ok = false;
  int checked_points = 0;
  bool enumerated = false;  // full E-enumeration vs a supplied sample
  // indices into the supplied point list where a Hom space was nonzero
  std::vector<int> hom_failures;
  int rank_m = -1;
  int expected_rank_m = -1;
  bool rank_ok = false;
  bool pass = false;
};

// Pointwise certificate for membership in the D~_n locus: dims (n,n),
// Hom(F, Res p) = Hom(Res p, F) = 0 for every supplied E-point rep, and
// rank of the relation matrix exactly 2n+1.
MembershipCertificate membership_check_Dn(const Field& F, const RelationTensor& rel,
                                          const Delta0Rep& f,
                                          const std::vector<DeltaRep>& point_reps,
                                          bool enumerated);

// Representation of dims (2,1,0) attached to a line object, via the dual of
// the degree-one part of the left quotient A/Au.
DeltaRep line_object_rep(const AlgebraTable& T, const std::vector<Scalar>& u);

}  // namespace skly3
