#include <doctest.h>

#include "edenca/poly/ideal.hpp"
#include "properties.hpp"

using namespace edenca;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F7 = FieldSpec::prime(7);

Ideal ideal(std::vector<std::string> vars, std::vector<std::string> gens) { return Ideal::parse(vars, gens); }

std::vector<std::string> strings(const std::vector<IntPoly>& ps, std::span<const std::string> vars) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_polynomial(p, vars));
  return out;
}

}  // namespace

TEST_CASE("parse and format") {
  std::vector<std::string> v{"x", "y"};
  CHECK(format_polynomial(parse_polynomial("(x+y)^2 - 2*x*y", v), v) == "x^2 + y^2");
  CHECK(format_polynomial(parse_polynomial("0", v), v) == "0");
  CHECK_THROWS_AS(parse_polynomial("x + z", v), PolynomialParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", v), PolynomialParseError);
}

TEST_CASE("prime field validation") {
  CHECK_THROWS(FieldSpec::parse("fp:6"));
  CHECK(FieldSpec::parse("fp:7").modulus == 7);
  CHECK(!FieldSpec::parse("q").is_prime());
}

TEST_CASE("normal forms") {
  std::vector<std::string> v{"x", "y"};
  PolyRing<RationalField> lex(RationalField(), 2, MonomialOrder::lex());
  auto lift = [&](const char* s) {
    return map_coefficients(parse_polynomial(s, v), lex, [](const mpz_class& c) { return mpq_class(c); });
  };
  std::vector<Polynomial<RationalField>> bx{lift("x")};
  CHECK(normal_form(lex, lift("x^2"), std::span<const Polynomial<RationalField>>(bx)).is_zero());
  auto f = lift("x^2*y + y");
  CHECK(normal_form(lex, f, std::span<const Polynomial<RationalField>>{}).terms.size() == f.terms.size());
  std::vector<Polynomial<RationalField>> bxy{lift("x*y - 1")};
  auto r = normal_form(lex, lift("x^2*y"), std::span<const Polynomial<RationalField>>(bxy));
  CHECK(r.terms.size() == 1);
  CHECK(r.leading().exponents == Exponents{1, 0});
}

TEST_CASE("reduced Groebner bases") {
  auto i1 = ideal({"x"}, {"x"});
  CHECK(strings(groebner_basis(i1, Q), i1.variables) == std::vector<std::string>{"x"});
  auto i2 = ideal({"x", "y"}, {"x*y"});
  CHECK(strings(groebner_basis(i2, F5), i2.variables) == std::vector<std::string>{"x*y"});
  auto i3 = ideal({"x", "y", "z"}, {"x^2 - y", "x^3 - z"});
  for (const auto& field : {Q, F5, F7}) {
    auto gb = groebner_basis(i3, field, MonomialOrder::lex());
    CHECK(with_field(field, [&](const auto& k) { return testing::is_groebner_basis(k, i3, gb, MonomialOrder::lex()); }));
    // idempotent
    Ideal again{i3.variables, gb};
    CHECK(groebner_basis(again, field, MonomialOrder::lex()) == gb);
  }
  auto unit = ideal({"x"}, {"x", "x + 1"});
  CHECK(strings(groebner_basis(unit, Q), unit.variables) == std::vector<std::string>{"1"});
}

TEST_CASE("membership") {
  CHECK(ideal_member(parse_polynomial("x^2", std::vector<std::string>{"x"}), ideal({"x"}, {"x"}), Q));
  CHECK(ideal_member(parse_polynomial("1", std::vector<std::string>{"x"}), ideal({"x"}, {"x", "x+1"}), Q));
  std::vector<std::string> v{"x", "y"};
  CHECK(!ideal_member(parse_polynomial("y", v), ideal(v, {"x*y"}), Q));
  CHECK(!ideal_member(parse_polynomial("y", v), ideal(v, {"x*y"}), F5));
}

TEST_CASE("elimination") {
  auto e1 = eliminate(ideal({"x", "y"}, {"x", "y - 1"}), std::vector<std::string>{"x"}, Q);
  CHECK(e1.generator_strings() == std::vector<std::string>{"y - 1"});
  auto e2 = eliminate(ideal({"x", "y"}, {"y - x^2"}), std::vector<std::string>{"x"}, Q);
  CHECK(e2.generators.empty());
  auto e3 = eliminate(ideal({"x", "y"}, {"x*y - 1", "y^2"}), std::vector<std::string>{"x"}, Q);
  CHECK(e3.generator_strings() == std::vector<std::string>{"1"});
}

TEST_CASE("Krull dimension") {
  CHECK(krull_dimension(ideal({"x", "y", "z"}, {}), Q) == Dimension::of(3));
  CHECK(krull_dimension(ideal({"x", "y"}, {"x*y"}), Q) == Dimension::of(1));
  CHECK(krull_dimension(ideal({"x", "y"}, {"x", "y"}), F5) == Dimension::of(0));
  CHECK(krull_dimension(ideal({"x"}, {"1"}), Q).is_empty());
  CHECK(Dimension::empty() < Dimension::of(0));
  CHECK(krull_dimension(ideal({"x", "y", "z"}, {"x*z", "y*z"}), Q) == Dimension::of(2));
}

TEST_CASE("image closures") {
  std::vector<std::string> x{"x"}, xy{"x", "y"};
  auto sq = image_closure(std::vector<IntPoly>{parse_polynomial("x^2", x)}, ideal(x, {}), {"t"}, Q);
  CHECK(sq.generators.empty());
  CHECK(krull_dimension(sq, Q) == Dimension::of(1));
  auto dom = image_closure(std::vector<IntPoly>{parse_polynomial("x", xy), parse_polynomial("x*y", xy)},
                           ideal(xy, {}), {"s", "t"}, Q);
  CHECK(dom.generators.empty());
  auto con = image_closure(std::vector<IntPoly>{parse_polynomial("x", xy), parse_polynomial("0", xy)},
                           ideal(xy, {"x*y"}), {"s", "t"}, F5);
  CHECK(con.generator_strings() == std::vector<std::string>{"t"});
  CHECK(krull_dimension(con, F5) == Dimension::of(1));
}

TEST_CASE("emptiness over the closure") {
  CHECK(empty_over_closure(ideal({"x"}, {"x", "x - 1"}), Q));
  CHECK(!empty_over_closure(ideal({"x"}, {"x^2 + 1"}), Q));
  auto orphan = ideal({"a", "b", "c", "d"}, {"a*b - 1", "b*c", "c*d - 1"});
  CHECK(empty_over_closure(orphan, Q));
  CHECK(empty_over_closure(orphan, F5));
}

TEST_CASE("substitution and evaluation") {
  std::vector<std::string> v{"x", "y"};
  auto f = parse_polynomial("x*y + 3", v);
  std::vector<std::optional<mpz_class>> a{mpz_class(2), std::nullopt};
  CHECK(format_polynomial(substitute(f, a), v) == "2*y + 3");
  std::vector<mpz_class> pt{2, -5};
  CHECK(evaluate(f, pt) == -7);
  std::vector<std::uint64_t> ptm{2, 2};
  CHECK(evaluate_mod(f, ptm, PrimeField(5)) == 2);
}

TEST_CASE("dimension calculus on random ideals") {
  auto t = testing::dimension_calculus(42, 100);
  CHECK(t.trials == 100);
  CHECK(t.union_max == 0);
  CHECK(t.product_sum == 0);
  CHECK(t.groebner == 0);
  CHECK(t.elimination == 0);
  CHECK(t.image_monotone == 0);
}
