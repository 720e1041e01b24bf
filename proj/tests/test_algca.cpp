#include <doctest.h>

#include <random>

#include "edenca/algca.hpp"
#include "support.hpp"

using namespace edenca;
using namespace edenca::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F7 = FieldSpec::prime(7);

FiniteSubset site(std::int64_t n) { return box(1, n, n); }

std::vector<IntPoly> components(const CellularAutomaton& ca) {
  return std::get<PolynomialRule>(ca.rule()).components;
}

const AffineVariety& variety(const CellularAutomaton& ca) { return std::get<AffineAlphabet>(ca.alphabet()).variety; }

}  // namespace

TEST_CASE("window variables") {
  auto ca = contraction();
  CHECK(window_variables(ca, box(1, -1, 0)) == std::vector<std::string>{"x_m1", "y_m1", "x_0", "y_0"});
  CHECK(window_variables(product_rule(), site(2), "y_") == std::vector<std::string>{"y_x_2"});
  CHECK(product_ideal(ca, box(1, 0, 1)).generator_strings() == std::vector<std::string>{"x_0*y_0", "x_1*y_1"});
}

TEST_CASE("rule validation") {
  auto prod = product_rule();
  CHECK(validate_rule(variety(prod), prod.memory(), components(prod), F5).certified());
  auto con = contraction();
  CHECK(validate_rule(variety(con), con.memory(), components(con), Q).certified());

  AffineVariety circle{Ideal::parse({"x", "y"}, std::vector<std::string>{"x^2 + y^2 - 1"}), std::nullopt};
  std::vector<std::string> vars{"x_0", "y_0"};
  std::vector<IntPoly> shift_up{parse_polynomial("x_0", vars), parse_polynomial("y_0 + 1", vars)};
  auto v = validate_rule(circle, site(0), shift_up, Q);
  CHECK(v.refuted());
  CHECK(v.witness["normal_form"] != "0");
  CHECK_THROWS_AS(affine({0}, "q", {"x", "y"}, {"x^2 + y^2 - 1"}, nullptr, {"x_0", "y_0 + 1"}), SpecError);
}

TEST_CASE("induced window maps") {
  auto m = induced_map(product_rule(), box(1, 0, 1), Sign::Plus);
  CHECK(m.source == box(1, 0, 2));
  REQUIRE(m.components.size() == 2);
  CHECK(format_polynomial(m.components[0], m.domain.variables) == "x_0*x_1");
  CHECK(format_polynomial(m.components[1], m.domain.variables) == "x_1*x_2");

  auto id = induced_map(affine_identity(), box(1, 0, 2), Sign::Plus);
  for (std::size_t i = 0; i < 3; ++i) CHECK(format_polynomial(id.components[i], id.domain.variables) == id.domain.variables[i]);

  auto con = induced_map(contraction(), box(1, 0, 1), Sign::Minus);
  CHECK(format_polynomial(con.components[0], con.domain.variables) == "x_0");
  CHECK(format_polynomial(con.components[1], con.domain.variables) == "0");
}

TEST_CASE("window image dimensions") {
  for (const auto& f : {"fp:5", "fp:7", "q"}) {
    auto prod = product_rule(f);
    auto field = FieldSpec::parse(f);
    CHECK(window_image_dim(prod, box(1, -1, 1), field).dim == Dimension::of(3));
    CHECK(window_image_dim(prod, site(0), field).dim == Dimension::of(1));
    CHECK(window_image_dim(contraction(f), box(1, 0, 1), field).dim == Dimension::of(2));
  }
}

TEST_CASE("mean dimension") {
  auto prod = mdim_estimate(product_rule(), 3, F5);
  REQUIRE(prod.rows.size() == 4);
  for (const auto& row : prod.rows) {
    CHECK(row.dim == 2 * row.m + 1);
    CHECK(row.ratio == 1);
  }
  CHECK(prod.estimate == 1);
  CHECK(prod.bounded());
  for (const auto& row : mdim_estimate(affine_identity(), 3, Q).rows) CHECK(row.ratio == 1);
  for (const auto& row : mdim_estimate(contraction(), 2, F7).rows) CHECK(row.ratio == 1);
  CHECK_THROWS_AS(mdim_estimate(free_group_example(), 1, F2), NonAmenableGroup);
}

TEST_CASE("window dimension inequalities on random windows") {
  std::mt19937_64 rng(31);
  std::vector<CellularAutomaton> cas{product_rule(), contraction(), affine_identity(),
                                     affine({0, 1}, "fp:5", {"x", "y"}, {}, {0, 0}, {"x_0", "x_0*y_1"})};
  std::uniform_int_distribution<std::int64_t> lo(-3, 0), len(1, 3);
  for (const auto& ca : cas) {
    const auto dim_x = variety(ca).dimension(F5).value();
    for (int t = 0; t < 4; ++t) {
      auto a = lo(rng);
      auto omega = box(1, a, a + len(rng));
      auto inner = interior(omega, ca.memory());
      auto full = window_image_dim(ca, omega, F5).dim.value();
      CHECK(full <= static_cast<std::int64_t>(omega.size()) * dim_x);
      if (inner.empty()) continue;
      auto in = window_image_dim(ca, inner, F5).dim.value();
      CHECK(in <= full);
      CHECK(full <= in + static_cast<std::int64_t>(omega.size() - inner.size()) * dim_x);
    }
  }
}

TEST_CASE("orphan certification") {
  for (const auto& f : {"fp:5", "q"}) {
    auto prod = product_rule(f);
    auto d = pattern(prod.group(), {-1, 0, 1}, {1, 0, 1});
    auto v = orphan_certify(prod, d, d.support, FieldSpec::parse(f));
    CHECK(v.certified());
    CHECK(v.method == Method::ClosureCertificate);
    CHECK(v.witness["groebner_basis"] == Json::array({"1"}));
  }
  auto id = affine_identity();
  auto t = pattern(id.group(), {0, 1}, {3, 4});
  auto solvable = orphan_certify(id, t, t.support, F5);
  CHECK(solvable.undecided());
  CHECK(solvable.witness["consistent"] == true);

  auto con = contraction();
  auto p = pattern(con.group(), {0}, Json::array({Json::array({0, 1})}));
  CHECK(orphan_certify(con, p, p.support, F7).certified());
  auto off = pattern(con.group(), {0}, Json::array({Json::array({1, 1})}));
  CHECK_THROWS_AS(orphan_certify(con, off, off.support, F7), CaError);
}

TEST_CASE("orphan certificates never contradict finite-field preimages") {
  auto prod = product_rule("fp:3");
  auto pts = enumerate_alphabet(prod);
  auto omega = box(1, 0, 1);
  auto plus = neighborhood(omega, prod.memory());
  std::set<std::vector<Value>> reached;
  std::vector<Value> u(3, Value{0});
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& c : pts) {
        auto img = tau_plus(prod, omega, Pattern(plus, {a, b, c}));
        reached.insert(img.values);
      }
  for (const auto& a : pts)
    for (const auto& b : pts) {
      Pattern target(omega, {a, b});
      auto v = orphan_certify(prod, target, omega, FieldSpec::prime(3));
      if (reached.contains(target.values)) CHECK(!v.certified());
    }
}

TEST_CASE("starstar certificates") {
  CHECK(starstar_check(affine_identity(), box(1, 0, 2), 0, 1, F5).certified());
  auto prod = starstar_check(product_rule(), site(0), 0, 1, F5);
  CHECK(prod.certified());
  CHECK(prod.witness["dim"] == 1);
  CHECK(starstar_check(contraction(), site(0), 0, 1, F7).certified());
  CHECK(starstar_check(contraction(), box(1, 0, 1), 0, 1, F7).certified());
  // x -> 0 never reaches full dimension
  auto zero = affine({0}, "fp:5", {"x"}, {}, {0}, {"0"});
  CHECK(starstar_check(zero, site(0), 4, 1, F5).undecided());
}

TEST_CASE("star candidates") {
  auto id = affine_identity("fp:5");
  auto vars = window_variables(id, site(0));
  auto h = Ideal::parse(vars, std::vector<std::string>{vars[0]});
  auto v = star_check_candidate(id, site(0), h, 4, 1, F5);
  CHECK(v.undecided());
  CHECK(v.witness.contains("distinguishing_boundary"));

  auto prod = product_rule("fp:2");
  auto pv = window_variables(prod, site(0));
  auto ph = Ideal::parse(pv, std::vector<std::string>{pv[0]});
  auto w = star_check_candidate(prod, site(0), ph, 4, 1, F2);
  CHECK(w.undecided());
  REQUIRE(w.witness.contains("distinguishing_boundary"));
  // the all-zero collar erases the window and cannot distinguish
  const auto& collar = w.witness["distinguishing_boundary"]["values"];
  CHECK(std::any_of(collar.begin(), collar.end(), [](const Json& v) { return v != Json::array({0}); }));

  auto fix = hyperplane_fixture();
  auto window = box(1, -2, 2);
  auto fv = window_variables(algebraic_form(fix), window);
  auto fh = Ideal::parse(fv, std::vector<std::string>{fv[2 * 2 + 1]});
  CHECK(star_check_candidate(fix, window, fh, 8, 1, F2).refuted());
}

TEST_CASE("tiling deficit bounds") {
  auto z = GroupSpec::lattice(1);
  auto singles = tiling_deficit_bound(z, site(0), 1, 0, 3);
  CHECK(singles.back().size == 7);
  CHECK(singles.back().bound == 0);
  auto pairs = tiling_deficit_bound(z, box(1, 0, 1), 1, 1, 4);
  CHECK(pairs.back().tiles == 4);
  CHECK(pairs.back().bound == 5);
  CHECK_THROWS(tiling_deficit_bound(z, box(1, 0, 1), 1, 2, 4));

  auto id = affine_identity("q");
  auto tile = box(1, 0, 1);
  auto tiling = make_tiling(tile, FolnerSequence(z).set(4));
  auto vars = window_variables(id, tile);
  auto diag = Ideal::parse(vars, std::vector<std::string>{vars[0] + " - " + vars[1]});
  auto d = tile_constrained_dimension(id, tiling, FolnerSequence(z).set(4), diag, Q);
  CHECK(d <= Dimension::of(pairs.back().bound));
  CHECK(d == Dimension::of(5));
}

TEST_CASE("equivalence harness") {
  auto prod = product_rule();
  std::vector<Pattern> t{pattern(prod.group(), {-1, 0, 1}, {1, 0, 1})};
  auto r = equivalence_harness(prod, 2, 2, 42, F5, t);
  CHECK(r.consistent());
  CHECK(r.mdim_full);
  CHECK(r.orphan_found);

  auto con = contraction();
  std::vector<Pattern> ct{pattern(con.group(), {0}, Json::array({Json::array({0, 1})}))};
  auto rc = equivalence_harness(con, 2, 2, 42, F7, ct);
  CHECK(rc.consistent());
  CHECK(rc.starstar_all);
  CHECK(rc.orphan_found);

  auto id = affine_identity();
  std::vector<Pattern> it{pattern(id.group(), {0}, {2})};
  auto ri = equivalence_harness(id, 2, 2, 42, F5, it);
  CHECK(ri.consistent());
  CHECK(!ri.orphan_found);
  CHECK(ri.starstar_all);
  CHECK(ri.checks.size() == 4);
}

TEST_CASE("window dimensions are field independent") {
  for (const auto& make : {+[](const std::string& f) { return product_rule(f); },
                           +[](const std::string& f) { return contraction(f); },
                           +[](const std::string& f) { return affine_identity(f); }}) {
    std::vector<Dimension> dims;
    for (const auto& f : {"fp:5", "fp:7", "q"})
      dims.push_back(window_image_dim(make(f), box(1, -1, 1), FieldSpec::parse(f)).dim);
    CHECK(dims[0] == dims[1]);
    CHECK(dims[1] == dims[2]);
  }
}
