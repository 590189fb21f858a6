#include "skly3/ktheory.hpp"

#include <array>

namespace skly3 {

KClass class_from_hilbert(const std::vector<long long>& h, int qdeg_bound) {
  int D = static_cast<int>(h.size()) - 1;
  if (D <= qdeg_bound)
    throw Error("InsufficientDegrees",
                "need Hilbert data beyond degree " + std::to_string(qdeg_bound));
  auto hv = [&](int i) { return i < 0 ? 0LL : h[i]; };
  KClass c;
  for (int i = 0; i <= D; ++i) {
    long long q = hv(i) - 3 * hv(i - 1) + 3 * hv(i - 2) - hv(i - 3);
    if (i > qdeg_bound && q != 0)
      throw Error("InsufficientDegrees",
                  "third difference not yet zero at degree " + std::to_string(i));
    c.r += q;
    c.a -= static_cast<long long>(i) * q;
    c.b += static_cast<long long>(i) * (i - 1) / 2 * q;
  }
  return c;
}

KClass shift_class(const KClass& c, long long l) {
  return {c.r, c.a + l * c.r, l * (l + 1) / 2 * c.r + l * c.a + c.b};
}

NormalizedClass normalize_and_invariant(const KClass& c) {
  if (c.r != 1) throw Error("RankNotOne", "normalization needs rank 1");
  NormalizedClass out;
  out.n = c.a * (c.a + 1) / 2 - c.b;
  out.normalized = shift_class(c, -c.a);
  return out;
}

long long chi_form(const KClass& c1, const KClass& c2) {
  // change basis to [O], [O(1)], [O(2)]: u0 = r - 2a + b, u1 = 3a - 2b, u2 = b - a
  auto to_u = [](const KClass& c) {
    return std::array<long long, 3>{c.r - 2 * c.a + c.b, 3 * c.a - 2 * c.b,
                                    c.b - c.a};
  };
  auto u = to_u(c1), v = to_u(c2);
  long long s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long d = j - i;
      s += u[i] * v[j] * (d + 1) * (d + 2) / 2;
    }
  return s;
}

std::pair<long long, long long> restriction_rank_degree(const KClass& c) {
  return {c.r, 3 * c.a};
}

SerrePairingReport serre_pairing_check() {
  SerrePairingReport rep;
  const KClass basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long lhs = chi_form(basis[i], basis[j]);
      long long rhs = chi_form(basis[j], shift_class(basis[i], -3));
      rep.rows.push_back({i, j, lhs, rhs});
      if (lhs != rhs) rep.pass = false;
    }
  return rep;
}

}  // namespace skly3
