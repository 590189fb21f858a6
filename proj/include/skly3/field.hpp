#pragma once

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>

namespace skly3 {

// Library-wide error with a stable machine-readable code ("ParamsInForbiddenLocus",
// "NotOnCurve", ...). The CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// All scalars are exact rationals. Over F_p the denominator is always 1 and the
// numerator is the canonical residue in [0, p).
using Scalar = mpq_class;

struct FieldSpec {
  enum class Kind { Prime, Rational };
  Kind kind = Kind::Rational;
  long p = 0;  // only for Kind::Prime

  static FieldSpec fp(long p) { return {Kind::Prime, p}; }
  static FieldSpec rationals() { return {Kind::Rational, 0}; }
  bool operator==(const FieldSpec&) const = default;
};

// Arithmetic context. One Field instance is shared by every scalar of a
// computation; mixing fields is a caller bug.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  bool is_prime_field() const { return spec_.kind == FieldSpec::Kind::Prime; }
  long p() const { return spec_.p; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return reduce(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return is_zero(sub(a, b)); }

  // Canonical representative: residue in [0, p) over F_p, normalized fraction over Q.
  Scalar reduce(const Scalar& a) const;

  // Decimal or fraction string ("17", "-3/4").
  Scalar parse(const std::string& s) const;
  std::string str(const Scalar& a) const;

  Scalar random(std::mt19937_64& rng) const;

 private:
  FieldSpec spec_;
  mpz_class pz_;
};

bool is_prime(long n);

}  // namespace skly3
