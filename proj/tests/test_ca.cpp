#include <doctest.h>

#include <random>

#include "edenca/ca.hpp"
#include "support.hpp"

using namespace edenca;
using namespace edenca::testing;

namespace {

const GroupSpec Z = GroupSpec::lattice(1);

GroupElement z(std::int64_t n) { return GroupElement::vector({n}); }

Pattern zpattern(std::int64_t lo, std::vector<std::int64_t> values) {
  std::vector<Value> v;
  for (auto x : values) v.push_back({x});
  return Pattern(box(1, lo, lo + static_cast<std::int64_t>(values.size()) - 1), v);
}

std::vector<std::int64_t> flat(const Pattern& p) {
  std::vector<std::int64_t> out;
  for (const auto& v : p.values) out.push_back(v.at(0));
  return out;
}

Pattern random_pattern(std::mt19937_64& rng, const FiniteSubset& s, std::int64_t k) {
  std::uniform_int_distribution<std::int64_t> d(0, k - 1);
  std::vector<Value> v;
  for (std::size_t i = 0; i < s.size(); ++i) v.push_back({d(rng)});
  return Pattern(s, v);
}

}  // namespace

TEST_CASE("local evaluation") {
  auto prod = product_rule();
  auto c = zpattern(0, {1, 1, 0});
  CHECK(apply_at(prod, c, z(0)) == Value{1});
  CHECK(apply_at(prod, c, z(1)) == Value{0});
  CHECK_THROWS_AS(apply_at(prod, c, z(2)), InsufficientSupport);
  auto id = identity_rule(3);
  auto d = zpattern(-1, {2, 0, 1});
  for (auto g : {-1, 0, 1}) CHECK(apply_at(id, d, z(g)) == d.at(z(g)));
}

TEST_CASE("tau plus") {
  auto u = zpattern(0, {1, 1, 0});
  CHECK(flat(tau_plus(product_rule(), box(1, 0, 1), u)) == std::vector<std::int64_t>{1, 0});
  CHECK(flat(tau_plus(xor_rule(), box(1, 0, 1), u)) == std::vector<std::int64_t>{0, 1});
  CHECK(tau_plus(identity_rule(), box(1, 0, 2), u) == u);
  CHECK_THROWS_AS(tau_plus(xor_rule(), box(1, 0, 2), u), InsufficientSupport);
}

TEST_CASE("tau minus") {
  auto u = zpattern(0, {1, 1, 0});
  auto m = tau_minus(product_rule(), box(1, 0, 2), u);
  CHECK(m.support == box(1, 0, 1));
  CHECK(flat(m) == std::vector<std::int64_t>{1, 0});
  CHECK(tau_minus(product_rule(), box(1, 0, 0), zpattern(0, {1})).support.empty());
  CHECK(tau_minus(identity_rule(), box(1, 0, 2), u) == u);
}

TEST_CASE("shift") {
  auto p = zpattern(0, {1, 0});
  CHECK(shift(z(0), p) == p);
  CHECK(shift(z(2), p) == zpattern(2, {1, 0}));
  std::mt19937_64 rng(3);
  auto f2 = GroupSpec::free_group(2);
  auto s = ball(f2, 2);
  for (int i = 0; i < 20; ++i) {
    auto q = random_pattern(rng, s, 3);
    auto g = GroupElement::word(f2, i % 2 ? "ab" : "Ba"), h = GroupElement::word(f2, i % 3 ? "bb" : "A");
    CHECK(shift(g, shift(h, q)) == shift(mul(g, h), q));
  }
}

TEST_CASE("tau plus only reads the neighborhood") {
  std::mt19937_64 rng(5);
  auto ca = finite({-1, 0, 2}, 3, random_table(rng, 3, 3));
  auto omega = box(1, 0, 3);
  auto plus = neighborhood(omega, ca.memory());
  auto wide = box(1, -6, 9);
  for (int i = 0; i < 50; ++i) {
    auto a = random_pattern(rng, wide, 3), b = random_pattern(rng, wide, 3);
    // b agrees with a on Ω⁺
    std::vector<Value> bv = b.values;
    for (std::size_t k = 0; k < wide.size(); ++k)
      if (plus.contains(wide[k])) bv[k] = a.values[k];
    CHECK(tau_plus(ca, omega, a) == tau_plus(ca, omega, Pattern(wide, bv)));
  }
}

TEST_CASE("tau minus is tau plus restricted to the interior") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    auto ca = finite({0, 1}, 2, random_table(rng, 2, 2));
    auto omega = box(1, -2, 2);
    auto plus = neighborhood(omega, ca.memory());
    auto u = random_pattern(rng, plus, 2);
    auto inner = interior(plus, ca.memory());
    CHECK(tau_minus(ca, plus, u) == tau_plus(ca, omega, u).restrict_to(set_intersection(inner, omega)));
  }
}

TEST_CASE("equivariance exhaustively on small windows") {
  std::mt19937_64 rng(9);
  for (std::size_t k = 2; k <= 3; ++k)
    for (int t = 0; t < 6; ++t) {
      auto ca = finite({0, 1}, k, random_table(rng, k, 2));
      for (std::int64_t s = 1; s <= 4; ++s) CHECK(check_equivariance(ca, box(1, 0, s - 1), 20, 1).passed);
    }
  CHECK(check_equivariance(identity_rule(), box(1, 0, 2), 10, 2).passed);
  auto prod = check_equivariance(product_rule(), box(1, -1, 1), 100, 42);
  CHECK(prod.passed);
  CHECK(prod.trials == 100);
}

TEST_CASE("corrupted window map is caught") {
  auto ca = xor_rule();
  WindowMap corrupted = [&](const FiniteSubset& omega, const Pattern& u) {
    auto p = tau_plus(ca, omega, u);
    // position-dependent flip
    for (std::size_t i = 0; i < p.values.size(); ++i)
      if (omega[i].data()[0] == 0) p.values[i][0] ^= 1;
    return p;
  };
  auto r = check_equivariance(ca, box(1, 0, 1), 50, 1, corrupted);
  CHECK(!r.passed);
  CHECK(r.counterexample.has_value());
}

TEST_CASE("rule validation at construction") {
  CHECK_THROWS_AS(finite({0, 1}, 2, {0, 1, 1}), SpecError);
  CHECK_THROWS_AS(finite({0}, 2, {0, 2}), SpecError);
  CHECK_THROWS(affine({0}, "fp:5", {"x"}, {}, nullptr, {"z_0"}));
  CHECK_THROWS(affine({0}, "fp:6", {"x"}, {}, nullptr, {"x_0"}));
}

TEST_CASE("memory transformations") {
  auto ca = product_rule();
  auto sym = symmetrize_memory(ca);
  CHECK(sym.memory() == box(1, -1, 1));
  auto u = zpattern(-1, {1, 2, 3, 4});
  CHECK(tau_plus(sym, box(1, 0, 1), zpattern(-1, {1, 2, 3, 4})) == tau_plus(ca, box(1, 0, 1), u));
  auto lin = linear_as_polynomial(hyperplane_fixture());
  CHECK(lin.is_polynomial());
  CHECK(lin.coordinate_count() == 2);
}

TEST_CASE("finite views of algebraic alphabets") {
  auto con = contraction("fp:3");
  auto pts = enumerate_alphabet(con);
  CHECK(pts.size() == 5);  // xy = 0 over F_3
  auto t = as_finite_table(con);
  CHECK(t.finite_size() == 5u);
  auto lin = hyperplane_fixture();
  CHECK(enumerate_alphabet(lin).size() == 4);
}
