#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "edenca/poly/polynomial.hpp"

namespace edenca {

template <class Field>
Polynomial<Field> make_monic(const PolyRing<Field>& ring, const Polynomial<Field>& f) {
  if (f.is_zero() || ring.coeffs().is_one(f.leading().coeff)) return f;
  return ring.scale(f, ring.coeffs().inv(f.leading().coeff));
}

// Fully reduced remainder of f on division by `basis` (multivariate division).
// No term of the result is divisible by a leading monomial of `basis`.
template <class Field>
Polynomial<Field> normal_form(const PolyRing<Field>& ring, Polynomial<Field> f,
                              std::span<const Polynomial<Field>> basis) {
  const auto& k = ring.coeffs();
  Polynomial<Field> remainder;
  while (!f.is_zero()) {
    const auto& lt = f.leading();
    const Polynomial<Field>* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading_monomial(), lt.exponents)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.terms.push_back(lt);
      f.terms.erase(f.terms.begin());
      continue;
    }
    auto c = k.div(lt.coeff, divisor->leading().coeff);
    auto m = monomial_quotient(lt.exponents, divisor->leading_monomial());
    f = ring.sub_mul_term(f, c, m, *divisor);
  }
  // Terms were appended in decreasing order, so the remainder is already sorted.
  return remainder;
}

template <class Field>
Polynomial<Field> s_polynomial(const PolyRing<Field>& ring, const Polynomial<Field>& f,
                               const Polynomial<Field>& g) {
  const auto& k = ring.coeffs();
  auto l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  auto a = ring.mul_term(f, k.inv(f.leading().coeff), monomial_quotient(l, f.leading_monomial()));
  auto b = ring.mul_term(g, k.inv(g.leading().coeff), monomial_quotient(l, g.leading_monomial()));
  return ring.sub(a, b);
}

// Turns any Groebner basis into the reduced one: minimal leading terms, monic,
// tails fully reduced, sorted by increasing leading monomial.
template <class Field>
std::vector<Polynomial<Field>> reduce_basis(const PolyRing<Field>& ring,
                                            std::vector<Polynomial<Field>> basis) {
  std::erase_if(basis, [](const auto& g) { return g.is_zero(); });
  std::vector<Polynomial<Field>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      // Equal leading monomials: keep the first occurrence only.
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(make_monic(ring, basis[i]));
  }
  std::vector<Polynomial<Field>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<Field>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial<Field> lead;
    lead.terms.push_back(minimal[i].leading());
    Polynomial<Field> tail = minimal[i];
    tail.terms.erase(tail.terms.begin());
    reduced.push_back(ring.add(lead, normal_form(ring, std::move(tail), std::span<const Polynomial<Field>>(others))));
  }
  std::sort(reduced.begin(), reduced.end(), [&ring](const auto& a, const auto& b) {
    return ring.order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

// Buchberger's algorithm with the normal selection strategy, the coprime
// leading-term criterion and the chain criterion. Returns the reduced basis;
// the unit ideal yields {1}.
template <class Field>
std::vector<Polynomial<Field>> buchberger(const PolyRing<Field>& ring,
                                          std::vector<Polynomial<Field>> generators) {
  std::vector<Polynomial<Field>> basis;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {ring.one()};
    basis.push_back(make_monic(ring, g));
  }
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) {
    return monomial_lcm(basis[p.first].leading_monomial(), basis[p.second].leading_monomial());
  };
  auto has_pending = [&](std::size_t a, std::size_t b) {
    return pending.contains({std::min(a, b), std::max(a, b)});
  };

  while (!pending.empty()) {
    auto best = pending.begin();
    auto best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      auto l = pair_lcm(*it);
      if (ring.order().compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const auto& li = basis[i].leading_monomial();
    const auto& lj = basis[j].leading_monomial();
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(basis[k].leading_monomial(), best_lcm) && !has_pending(i, k) && !has_pending(j, k))
        chain = true;
    }
    if (chain) continue;

    auto h = normal_form(ring, s_polynomial(ring, basis[i], basis[j]),
                         std::span<const Polynomial<Field>>(basis));
    if (h.is_zero()) continue;
    if (h.is_constant()) return {ring.one()};
    basis.push_back(make_monic(ring, h));
    std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }
  return reduce_basis(ring, std::move(basis));
}

template <class Field>
bool is_unit_basis(const std::vector<Polynomial<Field>>& basis) {
  return basis.size() == 1 && basis.front().is_constant();
}

}  // namespace edenca
