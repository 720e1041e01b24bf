#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "edenca/registry.hpp"
#include "edenca/spec_io.hpp"
#include "support.hpp"

using namespace edenca;
using namespace edenca::testing;

TEST_CASE("spec round trip") {
  for (const auto& e : registry()) {
    auto ca = e.make(e.default_field);
    auto text = serialize_spec(ca);
    auto again = parse_spec(text);
    CHECK(serialize_spec(again) == text);
  }
  auto prod = product_rule();
  CHECK(spec_to_json(prod)["format"] == 1);
}

TEST_CASE("spec errors") {
  SUBCASE("syntax errors carry a position") {
    try {
      parse_spec("{\n  \"group\": \"Z\",\n  \"memory\": [0,\n}");
      FAIL("expected SpecError");
    } catch (const SpecError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() >= 1);
    }
  }
  SUBCASE("undeclared variable") {
    CHECK_THROWS_AS(affine({0}, "fp:5", {"x"}, {}, nullptr, {"x_0*y_0"}), SpecError);
  }
  SUBCASE("composite modulus") {
    CHECK_THROWS_AS(affine({0}, "fp:6", {"x"}, {}, nullptr, {"x_0"}), SpecError);
  }
  SUBCASE("basepoint off the variety") {
    CHECK_THROWS_AS(affine({0}, "q", {"x", "y"}, {"x*y"}, {1, 1}, {"x_0", "0"}), SpecError);
  }
  SUBCASE("unknown group") { CHECK_THROWS_AS(parse_group("Q"), SpecError); }
}

TEST_CASE("group elements in specs") {
  CHECK(parse_element(GroupSpec::lattice(1), 3) == GroupElement::vector({3}));
  CHECK(parse_element(GroupSpec::lattice(2), "(1,-2)") == GroupElement::vector({1, -2}));
  CHECK(parse_element(GroupSpec::lattice(2), Json::array({1, -2})) == GroupElement::vector({1, -2}));
  auto f2 = GroupSpec::free_group(2);
  CHECK(parse_element(f2, "aB") == GroupElement::word(f2, "aB"));
}

TEST_CASE("registry is complete") {
  std::set<std::string> ids;
  for (const auto& e : registry()) ids.insert(e.id);
  CHECK(ids == std::set<std::string>{"intro-squaring-p1", "reducible-curve-uv", "affine-dominant-xrxsP",
                                     "product-rule-z", "free-group-linear", "linear-hyperplane-fixture",
                                     "finite-constant", "finite-xor"});
  CHECK(registry().size() == ids.size());
  CHECK_THROWS_AS(find_entry("nope"), UnknownEntry);
}

TEST_CASE("registry entries reproduce") {
  for (const auto& e : registry()) {
    CAPTURE(e.id);
    auto r = run_registry(e.id);
    CHECK(r.passed());
    CHECK(!r.comparisons.empty());
    for (const auto& c : r.comparisons) {
      CAPTURE(c.key);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("registry runs with explicit parameters") {
  RunOptions o;
  o.field = FieldSpec::prime(5);
  o.m_max = 3;
  auto prod = run_registry("product-rule-z", o);
  CHECK(prod.passed());
  REQUIRE(prod.mdim);
  CHECK(prod.mdim->rows.size() == 4);
  CHECK(prod.analyses.at("orphan")["kind"] == "certified");

  RunOptions x;
  x.m_max = 4;
  auto xr = run_registry("finite-xor", x);
  CHECK(xr.passed());
  CHECK(xr.analyses.at("orphan")["kind"] == "undecided_at_scale");

  RunOptions c;
  c.field = FieldSpec::prime(7);
  c.m_max = 2;
  CHECK(run_registry("reducible-curve-uv", c).passed());
}

TEST_CASE("reports") {
  RunOptions o;
  o.m_max = 2;
  auto r = run_registry("product-rule-z", o);
  CHECK(mdim_csv(r) == "m,size,dim,num,den\n0,1,1,1,1\n1,3,3,1,1\n2,5,5,1,1\n");

  auto again = run_registry("product-rule-z", o);
  CHECK(r.analysis_json().dump() == again.analysis_json().dump());

  auto empty = run_analyses(product_rule(), "empty", o, [](RunContext&) {});
  CHECK(empty.passed());
  CHECK(empty.analysis_json()["analyses"].empty());
  CHECK(mdim_csv(empty) == "m,size,dim,num,den\n");

  auto bad = run_analyses(product_rule(), "bad", o, [](RunContext& ctx) {
    ctx.analysis("x", [&] {
      ctx.expect("x.value", 1, 2, Source::Immediate);
      return Json::object();
    });
  });
  CHECK(!bad.passed());
  CHECK(bad.analysis_json()["comparisons"][0]["observed"] == 2);

  auto thrown = run_analyses(product_rule(), "thrown", o, [](RunContext& ctx) {
    ctx.analysis("boom", []() -> Json { throw std::runtime_error("boom"); });
  });
  CHECK(!thrown.passed());

  auto dir = std::filesystem::temp_directory_path() / "edenca_report_test";
  emit_report(r, dir);
  std::ifstream csv(dir / "mdim.csv");
  std::stringstream s;
  s << csv.rdbuf();
  CHECK(s.str() == mdim_csv(r));
  std::ifstream js(dir / "report.json");
  auto parsed = Json::parse(js);
  CHECK(parsed["format"] == 1);
  CHECK(parsed.contains("timings_ms"));
  CHECK(parsed["spec_digest"] == r.spec_digest);
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports hold no floating point") {
  for (const auto& e : registry()) {
    auto j = run_registry(e.id).to_json();
    std::vector<const Json*> stack{&j};
    while (!stack.empty()) {
      const Json* x = stack.back();
      stack.pop_back();
      CHECK(!x->is_number_float());
      if (x->is_structured())
        for (const auto& c : *x) stack.push_back(&c);
    }
  }
}
