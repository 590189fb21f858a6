#pragma once

#include <utility>
#include <vector>

#include "skly3/field.hpp"

namespace skly3 {

// Class in the Grothendieck group, coordinates (r, a, b) in the basis
// [O], [S], [P] (structure class, line class, point class).
struct KClass {
  long long r = 0, a = 0, b = 0;
  bool operator==(const KClass&) const = default;
};

// Third finite difference of a Hilbert series h_0, h_1, ..., h_D. The class
// is recovered from q_i = h_i - 3h_{i-1} + 3h_{i-2} - h_{i-3}; every q_i with
// qdeg_bound < i <= D must vanish, and D must exceed qdeg_bound so at least
// one vanishing degree is actually witnessed (else InsufficientDegrees).
KClass class_from_hilbert(const std::vector<long long>& h, int qdeg_bound);

// Class of the shifted module M(l).
KClass shift_class(const KClass& c, long long l);

struct NormalizedClass {
  KClass normalized;  // always (1, 0, -n)
  long long n = 0;    // the invariant a(a+1)/2 - b
};

// Requires rank 1 (RankNotOne); shifts by -a to reach (1, 0, -n).
NormalizedClass normalize_and_invariant(const KClass& c);

// Euler pairing chi(c1, c2).
long long chi_form(const KClass& c1, const KClass& c2);

// (rank, degree) of the restriction to the central curve: (r, 3a).
std::pair<long long, long long> restriction_rank_degree(const KClass& c);

struct SerrePairingReport {
  bool pass = true;
  // one row per basis pair: (i, j, chi(e_i, e_j), chi(e_j, e_i(-3)))
  std::vector<std::array<long long, 4>> rows;
};

// Verifies chi(c1, c2) = chi(c2, c1(-3)) on all nine basis pairs.
SerrePairingReport serre_pairing_check();

}  // namespace skly3
