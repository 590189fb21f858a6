#pragma once

#include <cstdint>
#include <vector>

#include "skly3/elliptic.hpp"
#include "skly3/ktheory.hpp"

namespace skly3 {

struct CohomologyRow {
  int l;      // twist
  int h0, h1; // dim ker / dim coker of A_{l+1} -> S_{n+l+1}
};

struct RankCertRow {
  int d;
  int rank, expected;  // expected = min(dim A_d, dim S_{n+d})
};

struct IdealWitness {
  int n = 0;
  std::uint64_t seed = 0;
  int attempts = 0;  // draws of the section s before the certificate passed
  std::vector<Scalar> u;  // linear form cutting out S = A/uA
  std::vector<Scalar> s;  // section, coordinates in S_n
  std::vector<RankCertRow> certificate;
  DeltaRep rep;           // dims (n, n, n-1)
  std::vector<CohomologyRow> cohomology;  // twists 0, -1, -2, -3
  std::vector<long long> ideal_hilbert;   // dims of I(-1) in low degrees
  KClass kclass;          // class of the ideal, normalized position
  long long invariant = 0;
};

// Builds a rank-n ideal witness from a random plane section: S = A/uA, a
// section s in S_n certified to multiply with maximal rank into S_{n+d},
// and the quotient rep (S_{n-1}, S_n/ks, S_{n+1}/sA_1). The algebra table
// must reach degree n + 7 (DegreeBudget otherwise). Throws NotSurjective
// after max_draws failed sections, CertificateFailed if a passing section
// still yields inconsistent invariants.
IdealWitness construct_ideal_rep(const AlgebraTable& T, int n, std::uint64_t seed,
                                 int max_draws = 50);

// det(alpha X + beta Y + gamma Z) as a degree-n form, expanded exactly.
struct DetCurve {
  TernaryForm form;
  bool identically_zero = false;
};
DetCurve det_curve(const Field& F, const Delta0Rep& f);

struct SampleResult {
  Delta0Rep rep;
  MembershipCertificate cert;
  int tries = 0;
};

// Rejection-samples dims (n,n) reps until the membership certificate passes.
SampleResult sample_Dn(const Geometry& geom, int n, std::uint64_t seed,
                       int max_tries = 2000);

}  // namespace skly3
