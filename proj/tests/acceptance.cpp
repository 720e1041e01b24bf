// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are exact;
// the only tolerances are the wall-clock budgets below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "edenca/algca.hpp"
#include "edenca/finite_goe.hpp"
#include "edenca/registry.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace edenca;
using namespace edenca::testing;

namespace {

constexpr double kBudgetSeconds = 120.0;
constexpr double kHarnessBudgetSeconds = 300.0;
constexpr std::uint64_t kSeed = 42;
constexpr int kRandomAutomata = 200;
constexpr int kRandomIdeals = 100;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec Q = FieldSpec::rationals();

std::vector<std::int64_t> flat(const Pattern& p) {
  std::vector<std::int64_t> out;
  for (const auto& v : p.values) out.push_back(v.at(0));
  return out;
}

void product_rule_dimensions(Outcome& o) {
  for (const auto& f : {"fp:5", "fp:7", "q"}) {
    auto field = FieldSpec::parse(f);
    auto ca = product_rule(f);
    FolnerSequence folner(ca.group());
    for (std::int64_t m = 0; m <= 3; ++m) {
      auto d = window_image_dim(ca, folner.set(m), field).dim;
      o.require(d == Dimension::of(2 * m + 1), std::string(f) + " m=" + std::to_string(m) + " dim " + d.to_string());
    }
    auto r = mdim_estimate(ca, 3, field);
    for (const auto& row : r.rows) o.require(row.ratio == 1, std::string(f) + " ratio");
  }
  o.detail << "dim 1,3,5,7 and ratios 1 over fp:5, fp:7, q";
}

void product_rule_orphan(Outcome& o) {
  for (const auto& f : {"fp:5", "q"}) {
    auto ca = product_rule(f);
    auto d = pattern(ca.group(), {-1, 0, 1}, {1, 0, 1});
    auto v = orphan_certify(ca, d, d.support, FieldSpec::parse(f));
    o.require(v.certified() && v.witness["groebner_basis"] == Json::array({"1"}), std::string(f) + " basis");
  }
  o.detail << "GB = {1} over fp:5 and q";
}

void dominant_map(Outcome& o) {
  auto ca = affine({0}, "q", {"x", "y"}, {}, {0, 0}, {"x_0", "x_0*y_0"});
  auto w = window_image_dim(ca, box(1, 0, 0), Q);
  o.require(w.closure.generators.empty(), "closure is the zero ideal");
  o.require(w.dim == Dimension::of(2), "dim 2");
  auto missing = pattern(ca.group(), {0}, Json::array({Json::array({0, 1})}));
  auto reached = pattern(ca.group(), {0}, Json::array({Json::array({1, 1})}));
  o.require(orphan_certify(ca, missing, missing.support, Q).certified(), "(0,1) empty");
  o.require(orphan_certify(ca, reached, reached.support, Q).witness["consistent"] == true, "(1,1) solvable");
  o.detail << "closure <0>, dim 2; (0,1) empty, (1,1) solvable";
}

void reducible_curve(Outcome& o) {
  auto ca = contraction("fp:7");
  o.require(krull_dimension(Ideal::parse({"x", "y"}, std::vector<std::string>{"x*y"}), F7) == Dimension::of(1),
            "dim <xy>");
  for (const auto& row : mdim_estimate(ca, 3, F7).rows) o.require(row.ratio == 1, "ratio");
  o.require(starstar_check(ca, box(1, 0, 0), 0, kSeed, F7).certified(), "starstar at {0}");
  o.require(starstar_check(ca, box(1, 0, 1), 0, kSeed, F7).certified(), "starstar at {0,1}");
  auto t = pattern(ca.group(), {0}, Json::array({Json::array({0, 1})}));
  o.require(orphan_certify(ca, t, t.support, F7).certified(), "orphan (0,1)");
  o.require(!ca.metadata().irreducible, "declared reducible");
  o.detail << "starstar certified, orphan certified, X reducible";
}

void squaring(Outcome& o) {
  auto ca = affine({0}, "q", {"x"}, {}, {0}, {"x_0^2"}, meta(true, true));
  o.require(window_image_dim(ca, box(1, 0, 0), Q).dim == Dimension::of(1), "image dim 1");
  for (int b : {0, 1, 2, -1}) {
    auto t = pattern(ca.group(), {0}, {b});
    o.require(orphan_certify(ca, t, t.support, Q).witness["consistent"] == true, "preimage of " + std::to_string(b));
  }
  auto f7 = affine({0}, "fp:7", {"x"}, {}, {0}, {"x_0^2"}, meta(true, true));
  std::vector<Value> one{{1}}, minus_one{{6}};
  o.require(f7.local_map(one) == Value{1} && f7.local_map(minus_one) == Value{1}, "1 and -1 square to 1");
  auto mep = mep_search(f7, 1);
  o.require(mep.found.has_value(), "erasable pair over fp:7");
  o.detail << "dim 1; preimages over q; 1 and 6 collide over fp:7 (fp:2 skipped)";
}

void ground_truth(Outcome& o) {
  struct Row {
    const char* name;
    CellularAutomaton ca;
    bool preinjective, surjective;
  };
  std::vector<Row> rows{{"identity", identity_rule(), true, true},
                        {"constant", constant_rule(), false, false},
                        {"and", and_rule(), false, false},
                        {"xor", xor_rule(), true, true}};
  for (const auto& r : rows) {
    auto orphan = orphan_search(r.ca, 8);
    auto mep = mep_search(r.ca, 8);
    o.require(orphan.orphan.has_value() == !r.surjective, std::string(r.name) + " surjectivity");
    o.require(mep.found.has_value() == !r.preinjective, std::string(r.name) + " pre-injectivity");
  }
  auto and_orphan = orphan_search(and_rule(), 8).orphan;
  o.require(and_orphan && flat(*and_orphan) == std::vector<std::int64_t>{1, 0, 1}, "AND orphan 101");
  auto and_mep = mep_search(and_rule(), 8).found;
  o.require(and_mep && and_mep->window.size() == 1, "AND MEP at 1");
  o.detail << "identity/constant/AND/XOR classified at windows <= 8";
}

void moore_myhill(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  int orphans = 0, meps = 0, violations = 0;
  for (int i = 0; i < kRandomAutomata; ++i) {
    const std::size_t k = i % 2 ? 3 : 2;
    auto ca = finite({0, 1}, k, random_table(rng, k, 2));
    auto orphan = orphan_search(ca, k == 2 ? 8 : 6);
    auto mep = mep_search(ca, 1);
    if (orphan.orphan) {
      ++orphans;
      // diam({0,1}) = 1
      mep = mep_search(ca, orphan.orphan->support.size() + 2);
      if (!mep.found) {
        ++violations;
        o.detail << "[violation at automaton " << i << "] ";
      }
    }
    if (mep.found) ++meps;
  }
  o.require(violations == 0, "orphan without erasable pair");
  o.detail << kRandomAutomata << " automata, " << orphans << " with orphans, " << meps << " with erasable pairs, "
           << violations << " violations";
}

void free_group(Outcome& o) {
  auto ca = free_group_example(2);
  auto pre = linear_preinjectivity(ca, std::vector<std::int64_t>{0, 1, 2});
  o.require(pre.certified(), "pre-injectivity up to radius 2");
  int radius = -1;
  for (int r = 0; r <= 3 && radius < 0; ++r)
    if (linear_orphan(ca, ball(ca.group(), r)).certified()) radius = r;
  o.detail << "pre-injective up to radius 2; ";
  if (radius >= 0)
    o.detail << "rank-deficit orphan at radius " << radius;
  else
    o.detail << "no rank-deficit orphan up to radius 3";
}

void hyperplane(Outcome& o) {
  auto ca = hyperplane_fixture();
  auto delta = pattern(ca.group(), {0}, Json::array({Json::array({0, 1})}));
  auto v = hyperplane_equivalence(ca, delta.support, delta);
  o.require(v.certified() && v.method == Method::ExhaustiveEnumeration, "hyperplane equivalence");
  auto window = box(1, -2, 2);
  auto vars = window_variables(algebraic_form(ca), window);
  auto h = Ideal::parse(vars, std::vector<std::string>{vars[2 * 2 + 1]});
  o.require(star_check_candidate(ca, window, h, 8, kSeed, FieldSpec::prime(2)).refuted(), "candidate refutation");
  o.detail << v.witness["boundaries_checked"].get<std::int64_t>() << " boundaries enumerated over fp:2";
}

void dimension_calculus_suite(Outcome& o) {
  auto t = dimension_calculus(kSeed, kRandomIdeals);
  o.require(t.union_max == 0, "union-max");
  o.require(t.product_sum == 0, "product-sum");
  o.require(t.image_monotone == 0, "image monotone");
  o.require(t.elimination == 0, "elimination");
  o.require(t.groebner == 0, "Groebner closure");
  o.detail << t.trials << " random ideals, " << t.violations() << " violations";
}

CellularAutomaton over(const CellularAutomaton& ca, const FieldSpec& field) {
  auto j = spec_to_json(algebraic_form(ca));
  j["alphabet"]["field"] = field.to_string();
  return spec_from_json(j);
}

void base_change(Outcome& o) {
  int compared = 0;
  for (const auto& e : registry()) {
    auto ca = e.make(e.default_field);
    if (ca.has_finite_alphabet()) continue;
    std::vector<FiniteSubset> windows;
    if (ca.group().amenable())
      for (std::int64_t m = 0; m <= 2; ++m) windows.push_back(FolnerSequence(ca.group()).set(m));
    else
      for (int r = 0; r <= 1; ++r) windows.push_back(ball(ca.group(), r));
    for (const auto& w : windows) {
      std::vector<Dimension> dims;
      for (const auto& f : {F5, F7, Q}) dims.push_back(window_image_dim(over(ca, f), w, f).dim);
      o.require(dims[0] == dims[1] && dims[1] == dims[2], e.id + " window of size " + std::to_string(w.size()));
      ++compared;
    }
  }
  o.detail << compared << " registry windows agree over fp:5, fp:7, q";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
    double budget;
  };
  const std::vector<Criterion> criteria{
      {1, "product rule window dimensions", product_rule_dimensions, kBudgetSeconds},
      {2, "product rule orphan certificate", product_rule_orphan, kBudgetSeconds},
      {3, "dominant non-surjective map", dominant_map, kBudgetSeconds},
      {4, "reducible curve contraction", reducible_curve, kBudgetSeconds},
      {5, "squaring map", squaring, kBudgetSeconds},
      {6, "finite ground-truth table", ground_truth, kBudgetSeconds},
      {7, "Moore-Myhill sampling harness", moore_myhill, kHarnessBudgetSeconds},
      {8, "free-group linear analog", free_group, kBudgetSeconds},
      {9, "linear hyperplane fixture", hyperplane, kBudgetSeconds},
      {10, "dimension calculus properties", dimension_calculus_suite, kBudgetSeconds},
      {11, "base-change invariance", base_change, kBudgetSeconds},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) {
      o.passed = false;
      o.detail << " [over budget]";
    }
    if (!o.passed) ++failures;
    std::printf("%s %2d %-34s %6.2fs  %s\n", o.passed ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
