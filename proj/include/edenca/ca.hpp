#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "edenca/group.hpp"
#include "edenca/poly/ideal.hpp"

namespace edenca {

class CaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientSupport : public CaError {
 public:
  using CaError::CaError;
};

// A value of the alphabet: one symbol index for finite alphabets, otherwise
// one entry per coordinate (residues in [0,p) over prime fields).
using Value = std::vector<std::int64_t>;

// An affine variety X ⊆ A^n given by its ideal; A = X(K).
struct AffineVariety {
  Ideal ideal;  // its variables are the coordinate names
  std::optional<std::vector<mpz_class>> basepoint;

  static AffineVariety affine_space(std::vector<std::string> coordinates);

  const std::vector<std::string>& coordinates() const { return ideal.variables; }
  std::size_t ambient_dimension() const { return ideal.nvars(); }
  Dimension dimension(const FieldSpec& field) const;
  bool contains(std::span<const std::int64_t> point, const FieldSpec& field) const;
};

struct FiniteAlphabet {
  std::vector<std::string> symbols;
};

struct AffineAlphabet {
  AffineVariety variety;
  FieldSpec field;
};

struct LinearAlphabet {
  FieldSpec field;  // must be prime
  int dimension = 1;
};

using Alphabet = std::variant<FiniteAlphabet, AffineAlphabet, LinearAlphabet>;

// Lookup table over A^M; entries enumerate A^M lexicographically with the
// first memory element most significant.
struct TableRule {
  std::vector<std::int64_t> outputs;
};

// One polynomial per coordinate of X, in the variables <coord>_<k> where k
// indexes the memory set (variable index k*n + j).
struct PolynomialRule {
  std::vector<IntPoly> components;
};

using FpMatrix = std::vector<std::vector<std::int64_t>>;

// c ↦ Σ_k blocks[k] · c(g m_k), one n×n block per memory element.
struct LinearRule {
  std::vector<FpMatrix> blocks;
};

using LocalRule = std::variant<TableRule, PolynomialRule, LinearRule>;

struct CaMetadata {
  bool irreducible = false;
  bool complete = false;
};

class CellularAutomaton {
 public:
  CellularAutomaton(FiniteSubset memory, Alphabet alphabet, LocalRule rule, CaMetadata metadata = {});

  const GroupSpec& group() const { return memory_.group(); }
  const FiniteSubset& memory() const { return memory_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const LocalRule& rule() const { return rule_; }
  const CaMetadata& metadata() const { return metadata_; }

  bool has_finite_alphabet() const { return std::holds_alternative<FiniteAlphabet>(alphabet_); }
  bool is_linear() const { return std::holds_alternative<LinearRule>(rule_); }
  bool is_polynomial() const { return std::holds_alternative<PolynomialRule>(rule_); }

  // Entries of a Value.
  std::size_t coordinate_count() const;
  // Prime or rational field for algebraic and linear alphabets.
  std::optional<FieldSpec> field() const;
  // Number of alphabet symbols when that is a finite enumeration.
  std::optional<std::size_t> finite_size() const;
  // Names of the rule variables <coord>_<k> for polynomial rules.
  std::vector<std::string> rule_variables() const;

  // The local defining map μ on values listed in memory order.
  Value local_map(std::span<const Value> memory_values) const;
  bool is_valid_value(const Value& v) const;

 private:
  FiniteSubset memory_;
  Alphabet alphabet_;
  LocalRule rule_;
  CaMetadata metadata_;
};

struct Pattern {
  FiniteSubset support;
  std::vector<Value> values;  // dense, in canonical support order

  Pattern() = default;
  Pattern(FiniteSubset s, std::vector<Value> v);

  const Value& at(const GroupElement& g) const;
  Pattern restrict_to(const FiniteSubset& omega) const;
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// τ(c)(g) = μ((g⁻¹c)|_M); requires gM ⊆ support(c).
Value apply_at(const CellularAutomaton& ca, const Pattern& c, const GroupElement& g);
// τ⁺_Ω : A^{Ω⁺} → A^Ω.
Pattern tau_plus(const CellularAutomaton& ca, const FiniteSubset& omega, const Pattern& u);
// τ⁻_Ω : A^Ω → A^{Ω⁻}.
Pattern tau_minus(const CellularAutomaton& ca, const FiniteSubset& omega, const Pattern& u);
// (gp)(h) = p(g⁻¹h).
Pattern shift(const GroupElement& g, const Pattern& p);

struct EquivarianceReport {
  bool passed = true;
  std::size_t trials = 0;
  std::optional<std::string> counterexample;
};

// A window map Ω, u on Ω⁺ ↦ pattern on Ω; tau_plus is the canonical one.
using WindowMap = std::function<Pattern(const FiniteSubset&, const Pattern&)>;

// Random patterns u on Ω⁺ and random g of length ≤ 3: compares the window map
// applied to gu on gΩ with g applied to its value on Ω. `map` defaults to
// tau_plus of `ca`.
EquivarianceReport check_equivariance(const CellularAutomaton& ca, const FiniteSubset& omega,
                                      std::size_t trials, std::uint64_t seed, WindowMap map = {});

// Re-expresses the rule on a larger memory set; the new elements are ignored.
CellularAutomaton extend_memory(const CellularAutomaton& ca, const FiniteSubset& larger);
// M ∪ M⁻¹ ∪ {1_G}.
CellularAutomaton symmetrize_memory(const CellularAutomaton& ca);

// Linear CA over F_p^n as a polynomial CA on A^n over the same field.
CellularAutomaton linear_as_polynomial(const CellularAutomaton& ca);
// Finite-table form of a CA whose alphabet is finitely enumerable: finite
// alphabets, linear alphabets and affine varieties over prime fields. Symbols
// are the points in lexicographic order.
CellularAutomaton as_finite_table(const CellularAutomaton& ca);
// The values of a finitely enumerable alphabet, lexicographic.
std::vector<Value> enumerate_alphabet(const CellularAutomaton& ca);
// Points of X(F_p), lexicographic; refuses more than `limit` candidates.
std::vector<Value> enumerate_points(const AffineVariety& x, std::uint64_t p, std::uint64_t limit = 1u << 22);

std::string value_to_string(const CellularAutomaton& ca, const Value& v);

}  // namespace edenca
