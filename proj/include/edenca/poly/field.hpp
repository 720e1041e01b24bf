#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace edenca {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ground field of a computation: a prime field F_p or the rationals.
struct FieldSpec {
  enum class Kind { Prime, Rational };

  Kind kind = Kind::Rational;
  std::uint64_t modulus = 0;  // only meaningful for Kind::Prime

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  // Accepts "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_prime() const { return kind == Kind::Prime; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Coefficient domains. Each provides the same small vocabulary so that the
// polynomial and Groebner templates are agnostic of the representation.

struct IntegerRing {
  using Elem = mpz_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem from_integer(const mpz_class& a) const { return a; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_integer(const mpz_class& a) const;
  Elem from_int(std::int64_t a) const;
  // Symmetric representative in (-p/2, p/2].
  mpz_class lift(Elem a) const;
  std::string to_string(Elem a) const { return lift(a).get_str(); }

 private:
  std::uint64_t p_;
};

struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem from_integer(const mpz_class& a) const { return mpq_class(a); }
  Elem from_int(std::int64_t a) const { return mpq_class(mpz_class(static_cast<long>(a))); }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

bool is_prime(std::uint64_t n);

}  // namespace edenca
