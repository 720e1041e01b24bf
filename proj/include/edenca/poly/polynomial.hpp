#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edenca/poly/field.hpp"

namespace edenca {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& a) {
  std::uint64_t d = 0;
  for (auto e : a) d += e;
  return d;
}

// True when the monomial `a` divides the monomial `b`.
inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponents monomial_quotient(const Exponents& b, const Exponents& a) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline Exponents monomial_product(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

struct MonomialOrder {
  enum class Kind { DegRevLex, Lex, Block };

  Kind kind = Kind::DegRevLex;
  // For Kind::Block: the first `block` variables form the eliminated block.
  std::size_t block = 0;

  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder eliminate_first(std::size_t k) { return {Kind::Block, k}; }

  std::strong_ordering compare(const Exponents& a, const Exponents& b) const {
    switch (kind) {
      case Kind::Lex:
        return lex_range(a, b, 0, a.size());
      case Kind::DegRevLex:
        return degrevlex_range(a, b, 0, a.size());
      case Kind::Block: {
        auto c = degrevlex_range(a, b, 0, block);
        if (c != 0) return c;
        return degrevlex_range(a, b, block, a.size());
      }
    }
    return std::strong_ordering::equal;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static std::strong_ordering lex_range(const Exponents& a, const Exponents& b, std::size_t lo,
                                        std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  static std::strong_ordering degrevlex_range(const Exponents& a, const Exponents& b,
                                              std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i > lo; --i)
      if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
    return std::strong_ordering::equal;
  }
};

template <class Coeffs>
struct Term {
  Exponents exponents;
  typename Coeffs::Elem coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.exponents == b.exponents && a.coeff == b.coeff; }
};

// Terms are kept strictly decreasing under the owning ring's order, with no
// zero coefficients. A polynomial is only meaningful relative to a PolyRing.
template <class Coeffs>
struct Polynomial {
  std::vector<Term<Coeffs>> terms;

  bool is_zero() const { return terms.empty(); }
  const Term<Coeffs>& leading() const { return terms.front(); }
  const Exponents& leading_monomial() const { return terms.front().exponents; }
  std::size_t size() const { return terms.size(); }
  bool is_constant() const {
    return terms.size() == 1 && total_degree(terms.front().exponents) == 0;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

template <class Coeffs>
class PolyRing {
 public:
  using Elem = typename Coeffs::Elem;
  using Poly = Polynomial<Coeffs>;
  using TermT = Term<Coeffs>;

  PolyRing(Coeffs coeffs, std::size_t nvars, MonomialOrder order = MonomialOrder::degrevlex())
      : coeffs_(std::move(coeffs)), nvars_(nvars), order_(order) {}

  const Coeffs& coeffs() const { return coeffs_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }

  Poly zero() const { return {}; }

  Poly constant(const Elem& c) const {
    Poly p;
    if (!coeffs_.is_zero(c)) p.terms.push_back({Exponents(nvars_, 0), c});
    return p;
  }

  Poly one() const { return constant(coeffs_.one()); }

  Poly variable(std::size_t i) const {
    Exponents e(nvars_, 0);
    e.at(i) = 1;
    return monomial(coeffs_.one(), std::move(e));
  }

  Poly monomial(const Elem& c, Exponents e) const {
    Poly p;
    if (!coeffs_.is_zero(c)) p.terms.push_back({std::move(e), c});
    return p;
  }

  // Sorts, combines like terms and drops zeros.
  Poly from_terms(std::vector<TermT> terms) const {
    std::sort(terms.begin(), terms.end(), [this](const TermT& a, const TermT& b) {
      return order_.compare(a.exponents, b.exponents) > 0;
    });
    Poly out;
    for (auto& t : terms) {
      if (!out.terms.empty() && out.terms.back().exponents == t.exponents) {
        out.terms.back().coeff = coeffs_.add(out.terms.back().coeff, t.coeff);
        if (coeffs_.is_zero(out.terms.back().coeff)) out.terms.pop_back();
      } else if (!coeffs_.is_zero(t.coeff)) {
        out.terms.push_back(std::move(t));
      }
    }
    return out;
  }

  // Re-sorts a polynomial built under another order with the same variables.
  Poly reorder(Poly p) const { return from_terms(std::move(p.terms)); }

  Poly add(const Poly& f, const Poly& g) const { return combine(f, g, false); }
  Poly sub(const Poly& f, const Poly& g) const { return combine(f, g, true); }

  Poly neg(const Poly& f) const {
    Poly out = f;
    for (auto& t : out.terms) t.coeff = coeffs_.neg(t.coeff);
    return out;
  }

  Poly scale(const Poly& f, const Elem& c) const {
    if (coeffs_.is_zero(c)) return {};
    Poly out = f;
    for (auto& t : out.terms) t.coeff = coeffs_.mul(t.coeff, c);
    // Over a ring with zero divisors this could create zeros; fields cannot.
    std::erase_if(out.terms, [this](const TermT& t) { return coeffs_.is_zero(t.coeff); });
    return out;
  }

  Poly mul_term(const Poly& f, const Elem& c, const Exponents& m) const {
    Poly out;
    if (coeffs_.is_zero(c)) return out;
    out.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
      Elem v = coeffs_.mul(t.coeff, c);
      if (!coeffs_.is_zero(v)) out.terms.push_back({monomial_product(t.exponents, m), std::move(v)});
    }
    return out;  // multiplication by a monomial preserves the order
  }

  // f - c*m*g in a single merge pass.
  Poly sub_mul_term(const Poly& f, const Elem& c, const Exponents& m, const Poly& g) const {
    return sub(f, mul_term(g, c, m));
  }

  Poly mul(const Poly& f, const Poly& g) const {
    std::vector<TermT> terms;
    terms.reserve(f.terms.size() * g.terms.size());
    for (const auto& a : f.terms)
      for (const auto& b : g.terms)
        terms.push_back({monomial_product(a.exponents, b.exponents), coeffs_.mul(a.coeff, b.coeff)});
    return from_terms(std::move(terms));
  }

  Poly pow(const Poly& f, std::uint32_t e) const {
    Poly result = one();
    Poly base = f;
    while (e > 0) {
      if (e & 1u) result = mul(result, base);
      e >>= 1u;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

  bool equal(const Poly& f, const Poly& g) const {
    if (f.terms.size() != g.terms.size()) return false;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      if (f.terms[i].exponents != g.terms[i].exponents) return false;
      if (coeffs_.sub(f.terms[i].coeff, g.terms[i].coeff) != coeffs_.zero()) return false;
    }
    return true;
  }

 private:
  Poly combine(const Poly& f, const Poly& g, bool subtract) const {
    Poly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
      auto c = order_.compare(f.terms[i].exponents, g.terms[j].exponents);
      if (c > 0) {
        out.terms.push_back(f.terms[i++]);
      } else if (c < 0) {
        const auto& t = g.terms[j++];
        out.terms.push_back({t.exponents, subtract ? coeffs_.neg(t.coeff) : t.coeff});
      } else {
        Elem v = subtract ? coeffs_.sub(f.terms[i].coeff, g.terms[j].coeff)
                          : coeffs_.add(f.terms[i].coeff, g.terms[j].coeff);
        if (!coeffs_.is_zero(v)) out.terms.push_back({f.terms[i].exponents, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) {
      const auto& t = g.terms[j];
      out.terms.push_back({t.exponents, subtract ? coeffs_.neg(t.coeff) : t.coeff});
    }
    return out;
  }

  Coeffs coeffs_;
  std::size_t nvars_;
  MonomialOrder order_;
};

// Rebuilds `f` in `to`, mapping every coefficient through `fn`.
template <class From, class To, class Fn>
Polynomial<To> map_coefficients(const Polynomial<From>& f, const PolyRing<To>& to, Fn&& fn) {
  std::vector<Term<To>> terms;
  terms.reserve(f.terms.size());
  for (const auto& t : f.terms) terms.push_back({t.exponents, fn(t.coeff)});
  return to.from_terms(std::move(terms));
}

// Renames variables: old variable i becomes new variable mapping[i].
template <class Coeffs>
Polynomial<Coeffs> rename_variables(const Polynomial<Coeffs>& f, std::span<const std::size_t> mapping,
                                    const PolyRing<Coeffs>& to) {
  std::vector<Term<Coeffs>> terms;
  terms.reserve(f.terms.size());
  for (const auto& t : f.terms) {
    Exponents e(to.nvars(), 0);
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i] != 0) e.at(mapping[i]) += t.exponents[i];
    terms.push_back({std::move(e), t.coeff});
  }
  return to.from_terms(std::move(terms));
}

}  // namespace edenca
