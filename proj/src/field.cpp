#include "skly3/field.hpp"

namespace skly3 {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldSpec::Kind::Prime) {
    if (spec_.p <= 2 || spec_.p >= (1L << 31) || !is_prime(spec_.p))
      throw Error("InvalidField", "p must be an odd prime < 2^31, got " +
                                      std::to_string(spec_.p));
    pz_ = spec_.p;
  }
}

Scalar Field::reduce(const Scalar& a) const {
  if (spec_.kind == FieldSpec::Kind::Rational) {
    Scalar r = a;
    r.canonicalize();
    return r;
  }
  // a always has denominator 1 or a unit mod p; fold both into a residue.
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pz_.get_mpz_t());
  if (den != 1) {
    mpz_class dinv;
    if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t()))
      throw Error("DivisionByZero", "denominator not invertible mod p");
    r = (r * dinv) % pz_;
  }
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("DivisionByZero", "inverse of zero");
  if (spec_.kind == FieldSpec::Kind::Rational) {
    Scalar r = 1 / a;
    r.canonicalize();
    return r;
  }
  mpz_class v = reduce(a).get_num(), r;
  if (!mpz_invert(r.get_mpz_t(), v.get_mpz_t(), pz_.get_mpz_t()))
    throw Error("DivisionByZero", "not invertible mod p");
  return Scalar(r);
}

Scalar Field::parse(const std::string& s) const {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return reduce(Scalar(mpz_class(s)));
    mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
    return reduce(Scalar(mpq_class(num, den)));
  } catch (const std::invalid_argument&) {
    throw Error("ParseError", "bad scalar '" + s + "'");
  }
}

std::string Field::str(const Scalar& a) const {
  Scalar r = reduce(a);
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (spec_.kind == FieldSpec::Kind::Prime) {
    std::uniform_int_distribution<long> d(0, spec_.p - 1);
    return Scalar(d(rng));
  }
  // small numerators keep rational spot checks readable and fast
  std::uniform_int_distribution<long> d(-9, 9);
  return Scalar(d(rng));
}

}  // namespace skly3
