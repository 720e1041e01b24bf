#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edenca/poly/field.hpp"
#include "edenca/poly/groebner.hpp"
#include "edenca/poly/polynomial.hpp"

namespace edenca {

// Integer-coefficient polynomials are the field-independent exchange format:
// inputs are parsed into them and field results are normalized back into them.
using IntPoly = Polynomial<IntegerRing>;

class PolynomialParseError : public std::invalid_argument {
 public:
  PolynomialParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

PolyRing<IntegerRing> integer_ring(std::size_t nvars);

// Grammar: sums of products of powers of atoms; atoms are integer literals,
// declared variable names and parenthesized expressions.
IntPoly parse_polynomial(std::string_view text, std::span<const std::string> variables);
std::string format_polynomial(const IntPoly& f, std::span<const std::string> variables);

struct Ideal {
  std::vector<std::string> variables;
  std::vector<IntPoly> generators;

  static Ideal parse(std::vector<std::string> variables, std::span<const std::string> generators);
  std::vector<std::string> generator_strings() const;
  std::size_t nvars() const { return variables.size(); }
};

// Krull dimension of V(I); the empty variety is ordered below every natural.
class Dimension {
 public:
  static Dimension empty() { return Dimension(); }
  static Dimension of(std::int64_t d) { return Dimension(d); }

  bool is_empty() const { return !value_.has_value(); }
  std::int64_t value() const;
  std::string to_string() const;

  friend bool operator==(const Dimension&, const Dimension&) = default;
  friend std::strong_ordering operator<=>(const Dimension& a, const Dimension& b) {
    if (a.is_empty() || b.is_empty()) return !a.is_empty() <=> !b.is_empty();
    return *a.value_ <=> *b.value_;
  }

 private:
  Dimension() = default;
  explicit Dimension(std::int64_t d) : value_(d) {}
  std::optional<std::int64_t> value_;
};

// Largest number of variables spanning no leading monomial, computed as the
// complement of a minimum hitting set of the leading-monomial supports.
Dimension dimension_from_leading_monomials(std::span<const Exponents> leading, std::size_t nvars);

// Reduced Groebner basis over `field`, normalized to primitive integer form.
std::vector<IntPoly> groebner_basis(const Ideal& ideal, const FieldSpec& field,
                                    MonomialOrder order = MonomialOrder::degrevlex());
// Remainder of f modulo a Groebner basis of the ideal, normalized to integer form
// (over Q this is the remainder up to a positive rational scalar).
IntPoly reduce_modulo(const IntPoly& f, const Ideal& ideal, const FieldSpec& field);
bool ideal_member(const IntPoly& f, const Ideal& ideal, const FieldSpec& field);
bool empty_over_closure(const Ideal& ideal, const FieldSpec& field);
Dimension krull_dimension(const Ideal& ideal, const FieldSpec& field);

// I ∩ K[remaining variables] via a block order with `eliminated` first.
Ideal eliminate(const Ideal& ideal, std::span<const std::string> eliminated, const FieldSpec& field);

// Closure of the image of `domain` under y_j = map[j], as an ideal in
// `target_variables`. Map components live in the domain's variables.
Ideal image_closure(std::span<const IntPoly> map, const Ideal& domain,
                    std::vector<std::string> target_variables, const FieldSpec& field);

// Evaluation of integer polynomials at integer points, exactly or mod p.
mpz_class evaluate(const IntPoly& f, std::span<const mpz_class> point);
std::uint64_t evaluate_mod(const IntPoly& f, std::span<const std::uint64_t> point, const PrimeField& k);

// Replaces the variables with an assigned value by that constant. The number
// of variables is unchanged; substituted variables simply no longer occur.
IntPoly substitute(const IntPoly& f, std::span<const std::optional<mpz_class>> assignment);

// Runs `fn` with the concrete coefficient field described by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_prime()) return fn(PrimeField(spec.modulus));
  return fn(RationalField());
}

}  // namespace edenca
