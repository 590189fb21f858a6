#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skly3/algebra.hpp"

using namespace skly3;

namespace {

SklyParams params123(const Field& F) {
  return {F.from_int(1), F.from_int(2), F.from_int(3)};
}

// coefficient series of (1 - t^3) / (1 - t)^3, the expected quotient dims
std::vector<int> central_quotient_series(int through) {
  std::vector<int> full(through + 4, 0);
  for (int d = 0; d < through + 4; ++d) full[d] = (d + 1) * (d + 2) / 2;
  std::vector<int> out(through + 1);
  for (int d = 0; d <= through; ++d)
    out[d] = full[d] - (d >= 3 ? full[d - 3] : 0);
  return out;
}

}  // namespace

TEST_CASE("forbidden parameter locus is rejected") {
  Field F(FieldSpec::fp(101));
  CHECK_THROWS_AS(validate_params(F, {F.zero(), F.one(), F.one()}), Error);
  CHECK_THROWS_AS(validate_params(F, {F.one(), F.one(), F.one()}), Error);
  Field F7(FieldSpec::fp(7));
  // (1,2,3) degenerates over F_7: (3abc)^3 = (a^3+b^3+c^3)^3
  CHECK_THROWS_AS(validate_params(F7, params123(F7)), Error);
  CHECK_NOTHROW(validate_params(F, params123(F)));
}

TEST_CASE("dimension table matches the polynomial growth") {
  for (const auto spec : {FieldSpec::fp(101), FieldSpec::rationals()}) {
    Field F(spec);
    AlgebraTable T = build_algebra(F, params123(F), 8);
    for (int d = 0; d <= 8; ++d) CHECK(T.dims[d] == (d + 1) * (d + 2) / 2);
  }
}

TEST_CASE("defining relations vanish and multiplication sides commute") {
  Field F(FieldSpec::fp(101));
  AlgebraTable T = build_algebra(F, params123(F), 6);
  // f_k = sum lam^k_ij x_i x_j maps to zero in A_2
  for (int k = 0; k < 3; ++k) {
    std::vector<Scalar> img(T.dims[2], F.zero());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Matrix& rm = T.rmul_gen(j, 1);
        for (int t = 0; t < T.dims[2]; ++t)
          img[t] = F.add(img[t], F.mul(T.rel.at(k, i, j), rm.at(t, i)));
      }
    for (const auto& v : img) CHECK(F.is_zero(v));
  }
  // left and right multiplications by generators commute (associativity probe)
  for (int g = 0; g < 3; ++g)
    for (int h = 0; h < 3; ++h)
      for (int d = 0; d <= 4; ++d)
        CHECK(mat_mul(F, T.lmul_gen(g, d + 1), T.rmul_gen(h, d)) ==
              mat_mul(F, T.rmul_gen(h, d + 1), T.lmul_gen(g, d)));
}

TEST_CASE("central cubic: unique, central, regular, right quotient dims") {
  Field F(FieldSpec::fp(101));
  AlgebraTable T = build_algebra(F, params123(F), 8);
  std::vector<Scalar> g = find_central_cubic(T);
  CHECK(static_cast<int>(g.size()) == T.dims[3]);
  CHECK(F.eq(g[0], F.one()));  // normalized leading coordinate
  for (int d = 0; d <= 5; ++d) {
    CHECK(T.lmul_elem(3, g, d) == T.rmul_elem(3, g, d));
    CHECK(rank(F, T.rmul_elem(3, g, d)) == T.dims[d]);  // g regular
  }
  CyclicModuleTable B = cyclic_quotient(T, 3, g, QuotientSide::RightQuotient);
  auto expected = central_quotient_series(8);
  for (int d = 0; d <= 8; ++d) CHECK(B.dims[d] == expected[d]);
}

TEST_CASE("line modules A/uA grow linearly") {
  Field F(FieldSpec::fp(101));
  AlgebraTable T = build_algebra(F, params123(F), 6);
  std::vector<Scalar> u = {F.from_int(1), F.from_int(5), F.from_int(17)};
  CyclicModuleTable S = cyclic_quotient(T, 1, u, QuotientSide::RightQuotient);
  for (int d = 0; d <= 6; ++d) CHECK(S.dims[d] == d + 1);
  // the module action matches multiplication in A through the section
  for (int g = 0; g < 3; ++g)
    for (int d = 0; d <= 4; ++d)
      CHECK(mat_mul(F, S.proj(d + 1), mat_mul(F, T.rmul_gen(g, d), S.section(d))) ==
            S.act(g, d));
  CHECK_THROWS_AS(
      cyclic_quotient(T, 1, {F.zero(), F.zero(), F.zero()}, QuotientSide::RightQuotient),
      Error);
}

TEST_CASE("left quotients A/Au grow linearly too") {
  Field F(FieldSpec::fp(101));
  AlgebraTable T = build_algebra(F, params123(F), 5);
  std::vector<Scalar> u = {F.from_int(2), F.from_int(0), F.from_int(9)};
  CyclicModuleTable L = cyclic_quotient(T, 1, u, QuotientSide::LeftQuotient);
  for (int d = 0; d <= 5; ++d) CHECK(L.dims[d] == d + 1);
}

TEST_CASE("hilbert data accessor truncates and guards the budget") {
  std::vector<int> dims = {1, 3, 6};
  CHECK(hilbert_data(dims, 1) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(hilbert_data(dims, 5), Error);
}
