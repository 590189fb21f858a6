#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skly3/ktheory.hpp"

using namespace skly3;

TEST_CASE("classes of the standard Hilbert series") {
  std::vector<long long> algebra, line, point;
  for (int d = 0; d <= 8; ++d) {
    algebra.push_back((d + 1) * (d + 2) / 2);
    line.push_back(d + 1);
    point.push_back(1);
  }
  CHECK(class_from_hilbert(algebra, 2) == KClass{1, 0, 0});
  CHECK(class_from_hilbert(line, 2) == KClass{0, 1, 0});
  CHECK(class_from_hilbert(point, 2) == KClass{0, 0, 1});
  CHECK(class_from_hilbert({1, 2, 3, 4, 5}, 2) == KClass{0, 1, 0});
  CHECK_THROWS_AS(class_from_hilbert({1, 3}, 2), Error);
  // a series that is not eventually polynomial of degree <= 2 in the window
  CHECK_THROWS_AS(class_from_hilbert({1, 3, 9, 27, 81}, 2), Error);
}

TEST_CASE("shift acts as a group") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    KClass c{static_cast<long long>(rng() % 7) - 3,
             static_cast<long long>(rng() % 11) - 5,
             static_cast<long long>(rng() % 11) - 5};
    CHECK(shift_class(c, 0) == c);
    for (long long l = -6; l <= 6; ++l)
      for (long long m = -6; m <= 6; ++m)
        CHECK(shift_class(shift_class(c, l), m) == shift_class(c, l + m));
  }
}

TEST_CASE("normalization round-trips on rank-one classes") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    KClass c{1, static_cast<long long>(rng() % 13) - 6,
             static_cast<long long>(rng() % 13) - 6};
    NormalizedClass nc = normalize_and_invariant(c);
    CHECK(nc.normalized.r == 1);
    CHECK(nc.normalized.a == 0);
    CHECK(nc.normalized.b == -nc.n);
    CHECK(shift_class(nc.normalized, c.a) == c);
    // the invariant is shift-invariant
    for (long long l = -3; l <= 3; ++l)
      CHECK(normalize_and_invariant(shift_class(c, l)).n == nc.n);
  }
  CHECK_THROWS_AS(normalize_and_invariant(KClass{2, 0, 0}), Error);
}

TEST_CASE("pairing values and Serre symmetry") {
  KClass O{1, 0, 0}, S{0, 1, 0}, P{0, 0, 1};
  CHECK(chi_form(O, O) == 1);
  CHECK(chi_form(O, S) == 1);
  CHECK(chi_form(O, P) == 1);
  CHECK(chi_form(S, S) == -1);
  CHECK(chi_form(S, P) == 0);
  CHECK(chi_form(P, S) == 0);
  CHECK(chi_form(P, P) == 0);
  SerrePairingReport rep = serre_pairing_check();
  CHECK(rep.pass);
  CHECK(rep.rows.size() == 9);
  for (const auto& r : rep.rows) CHECK(r[2] == r[3]);
}

TEST_CASE("restriction to the central curve") {
  CHECK(restriction_rank_degree({1, 0, -2}) == std::pair<long long, long long>{1, 0});
  CHECK(restriction_rank_degree({0, 1, 0}) == std::pair<long long, long long>{0, 3});
  CHECK(restriction_rank_degree({2, -1, 5}) == std::pair<long long, long long>{2, -3});
}
