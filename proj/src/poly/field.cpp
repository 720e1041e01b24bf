#include "edenca/poly/field.hpp"

#include <charconv>

namespace edenca {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!edenca::is_prime(p)) throw FieldError("field modulus " + std::to_string(p) + " is not prime");
  // Products of two residues must fit in 64 bits.
  if (p >= (std::uint64_t{1} << 31)) throw FieldError("field modulus must be below 2^31");
  return {Kind::Prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw FieldError("malformed field modulus in '" + std::string(text) + "'");
    return prime(p);
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected \"q\" or \"fp:<p>\")");
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "fp:" + std::to_string(modulus) : "q";
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in prime field");
  // Fermat: a^(p-2).
  Elem result = 1 % p_, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

PrimeField::Elem PrimeField::from_integer(const mpz_class& a) const {
  mpz_class r = a % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

PrimeField::Elem PrimeField::from_int(std::int64_t a) const {
  auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = a % m;
  return static_cast<Elem>(r < 0 ? r + m : r);
}

mpz_class PrimeField::lift(Elem a) const {
  mpz_class v(static_cast<unsigned long>(a));
  if (2 * a > p_) v -= static_cast<unsigned long>(p_);
  return v;
}

}  // namespace edenca
