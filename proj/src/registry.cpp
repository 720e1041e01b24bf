#include "edenca/registry.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "edenca/finite_goe.hpp"
#include "edenca/spec_io.hpp"

namespace edenca {

std::string to_string(Source s) {
  switch (s) {
    case Source::Published: return "published";
    case Source::Computed: return "computed";
    case Source::Immediate: return "immediate";
  }
  return "?";
}

bool Report::passed() const {
  return std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.passed; });
}

Json Report::analysis_json() const {
  Json j;
  j["format"] = 1;
  j["tool"] = "edenca";
  j["version"] = kVersion;
  j["entry"] = entry;
  j["spec_digest"] = spec_digest;
  j["seed"] = seed;
  j["field"] = field;
  j["m_max"] = m_max;
  j["analyses"] = Json::object();
  for (const auto& [name, value] : analyses) j["analyses"][name] = value;
  j["comparisons"] = Json::array();
  for (const auto& c : comparisons)
    j["comparisons"].push_back({{"key", c.key},
                                {"expected", c.expected},
                                {"observed", c.observed},
                                {"source", to_string(c.source)},
                                {"passed", c.passed}});
  j["passed"] = passed();
  return j;
}

Json Report::to_json() const {
  auto j = analysis_json();
  j["timings_ms"] = Json::object();
  for (const auto& [name, ms] : timings_ms) j["timings_ms"][name] = ms;
  return j;
}

void RunContext::analysis(const std::string& name, const std::function<Json()>& fn) {
  auto start = std::chrono::steady_clock::now();
  Json out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out = {{"error", e.what()}};
    report_.comparisons.push_back({name + ".completed", true, false, Source::Immediate, false});
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  report_.analyses[name] = std::move(out);
  report_.timings_ms[name] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
}

void RunContext::expect(const std::string& key, Json expected, Json observed, Source source) {
  const bool ok = expected == observed;
  report_.comparisons.push_back({key, std::move(expected), std::move(observed), source, ok});
}

namespace {

Json meta(bool irreducible, bool complete) { return {{"irreducible", irreducible}, {"complete", complete}}; }

CellularAutomaton affine_spec(const char* group, Json memory, const FieldSpec& field, std::vector<std::string> coords,
                              std::vector<std::string> ideal, Json basepoint, std::vector<std::string> components,
                              Json metadata) {
  Json j;
  j["format"] = 1;
  j["group"] = group;
  j["memory"] = std::move(memory);
  j["alphabet"] = {{"kind", "affine"}, {"field", field.to_string()}, {"coordinates", coords}, {"ideal", ideal}};
  if (!basepoint.is_null()) j["alphabet"]["basepoint"] = std::move(basepoint);
  j["rule"] = {{"kind", "polynomial"}, {"components", components}};
  j["metadata"] = std::move(metadata);
  return spec_from_json(j);
}

CellularAutomaton linear_spec(const char* group, Json memory, const FieldSpec& field, int dim, Json blocks,
                              Json metadata) {
  Json j{{"format", 1},
         {"group", group},
         {"memory", std::move(memory)},
         {"alphabet", {{"kind", "linear"}, {"field", field.to_string()}, {"dimension", dim}}},
         {"rule", {{"kind", "linear"}, {"blocks", std::move(blocks)}}},
         {"metadata", std::move(metadata)}};
  return spec_from_json(j);
}

CellularAutomaton finite_spec(Json memory, std::vector<std::string> symbols, std::vector<std::int64_t> outputs) {
  Json j{{"format", 1},
         {"group", "Z"},
         {"memory", std::move(memory)},
         {"alphabet", {{"kind", "finite"}, {"symbols", symbols}}},
         {"rule", {{"kind", "table"}, {"outputs", outputs}}}};
  return spec_from_json(j);
}

Pattern pattern(const CellularAutomaton& ca, Json support, Json values) {
  return pattern_from_json(ca.group(), {{"support", std::move(support)}, {"values", std::move(values)}});
}

FieldSpec prime_or(const FieldSpec& f, std::uint64_t fallback) {
  return f.is_prime() ? f : FieldSpec::prime(fallback);
}

Json ratios(const MdimReport& r) {
  Json out = Json::array();
  for (const auto& row : r.rows) out.push_back(rational_json(row.ratio));
  return out;
}

Json repeated(std::size_t n, const Json& v) { return Json(std::vector<Json>(n, v)); }

// Shared mdim analysis with the ratio = dim(X) expectation.
void mdim_section(RunContext& ctx, std::int64_t expected_dim, Source source) {
  ctx.analysis("mdim", [&] {
    auto r = mdim_estimate(ctx.ca, ctx.options.m_max, ctx.field);
    ctx.expect("mdim.ratios", repeated(r.rows.size(), rational_json(mpq_class(expected_dim))), ratios(r), source);
    ctx.expect("mdim.estimate", rational_json(mpq_class(expected_dim)), rational_json(r.estimate), source);
    auto j = to_json(r);
    ctx.set_mdim(std::move(r));
    return j;
  });
}

void harness_section(RunContext& ctx, std::vector<Pattern> targets) {
  ctx.analysis("harness", [&] {
    auto r = equivalence_harness(ctx.ca, std::min<std::int64_t>(ctx.options.m_max, 2), 4, ctx.options.seed, ctx.field,
                                 targets);
    ctx.expect("harness.consistent", true, r.consistent(), Source::Computed);
    return to_json(r);
  });
}

// P^1(F_q) as q + 1 symbols with the squaring map; "inf" is fixed.
CellularAutomaton projective_squaring(std::uint64_t q) {
  std::vector<std::string> symbols;
  std::vector<std::int64_t> outputs;
  for (std::uint64_t x = 0; x < q; ++x) {
    symbols.push_back(std::to_string(x));
    outputs.push_back(static_cast<std::int64_t>(x * x % q));
  }
  symbols.push_back("inf");
  outputs.push_back(static_cast<std::int64_t>(q));
  return finite_spec(Json::array({0}), symbols, outputs);
}

// X(F_q) for the projective curve uv = 0: the affine chart points of xy = 0
// plus (1:0:0) and (0:1:0); the contraction sends both points at infinity to (1:0:0).
CellularAutomaton projective_contraction(std::uint64_t q) {
  std::vector<std::string> symbols;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> points;
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y)
      if (x * y % q == 0) points.emplace_back(x, y);
  for (auto [x, y] : points) symbols.push_back("(" + std::to_string(x) + ":" + std::to_string(y) + ":1)");
  const auto inf_v = static_cast<std::int64_t>(points.size());
  symbols.push_back("(1:0:0)");
  symbols.push_back("(0:1:0)");
  std::vector<std::int64_t> outputs;
  for (auto [x, y] : points) {
    auto it = std::find(points.begin(), points.end(), std::make_pair(x, std::uint64_t{0}));
    outputs.push_back(static_cast<std::int64_t>(it - points.begin()));
  }
  outputs.push_back(inf_v);
  outputs.push_back(inf_v);
  return finite_spec(Json::array({0}), symbols, outputs);
}

void run_squaring(RunContext& ctx) {
  ctx.analysis("window_image", [&] {
    auto w = window_image_dim(ctx.ca, FiniteSubset(ctx.ca.group(), {GroupElement::vector({0})}), ctx.field);
    ctx.expect("window_image.dim", 1, w.dim.value(), Source::Published);
    return Json{{"dim", w.dim.value()}, {"closure", w.closure.generator_strings()}};
  });
  mdim_section(ctx, 1, Source::Published);
  ctx.analysis("preimages", [&] {
    Json out = Json::array();
    Json consistent = Json::array();
    for (int b : {0, 1, 2, -1}) {
      auto target = pattern(ctx.ca, {0}, {b});
      auto v = orphan_certify(ctx.ca, target, target.support, FieldSpec::rationals());
      consistent.push_back(v.witness["consistent"]);
      out.push_back(to_json(v));
    }
    ctx.expect("preimages.consistent_over_q", Json::array({true, true, true, true}), consistent, Source::Published);
    return out;
  });
  ctx.analysis("finite_field_chart", [&]() -> Json {
    const auto q = prime_or(ctx.field, 7).modulus;
    if (q == 2) return {{"skipped", "characteristic 2"}};
    auto p1 = projective_squaring(q);
    auto mep = mep_search(p1, 1);
    const auto& t = std::get<TableRule>(p1.rule()).outputs;
    ctx.expect("finite_field_chart.mep_window", 1, mep.found ? Json(mep.found->window.size()) : Json(nullptr),
               Source::Computed);
    ctx.expect("finite_field_chart.square_of_minus_one", Json::array({1, 1}),
               Json::array({t[1], t[q - 1]}), Source::Published);
    ctx.expect("finite_field_chart.infinity_fixed", static_cast<std::int64_t>(q), t[q], Source::Immediate);
    return {{"q", q}, {"mep", to_json(mep.verdict())}};
  });
  harness_section(ctx, {pattern(ctx.ca, {0}, {1})});
}

void run_reducible(RunContext& ctx) {
  const auto& x = std::get<AffineAlphabet>(ctx.ca.alphabet()).variety;
  ctx.analysis("variety", [&] {
    auto d = x.dimension(ctx.field);
    ctx.expect("variety.dim", 1, d.value(), Source::Published);
    return Json{{"dim", d.value()}};
  });
  mdim_section(ctx, 1, Source::Published);
  ctx.analysis("starstar", [&] {
    Json out = Json::object();
    Json kinds = Json::array();
    for (int size : {1, 2}) {
      auto omega = box(1, 0, size - 1);
      auto v = starstar_check(ctx.ca, omega, 0, ctx.options.seed, ctx.field);
      kinds.push_back(to_string(v.kind));
      out["size_" + std::to_string(size)] = to_json(v);
    }
    ctx.expect("starstar.kinds", Json::array({"certified", "certified"}), kinds, Source::Published);
    return out;
  });
  ctx.analysis("orphan", [&] {
    auto target = pattern(ctx.ca, {0}, Json::array({Json::array({0, 1})}));
    auto v = orphan_certify(ctx.ca, target, target.support, ctx.field);
    ctx.expect("orphan.kind", "certified", to_string(v.kind), Source::Published);
    return to_json(v);
  });
  ctx.analysis("window_image", [&] {
    auto w = window_image_dim(ctx.ca, box(1, 0, 1), ctx.field);
    ctx.expect("window_image.dim_0_1", 2, w.dim.value(), Source::Computed);
    return Json{{"dim", w.dim.value()}, {"closure", w.closure.generator_strings()}};
  });
  ctx.analysis("finite_field_projective", [&] {
    const auto q = prime_or(ctx.field, 7).modulus;
    auto fin = projective_contraction(q);
    auto orphan = orphan_search(fin, 1);
    auto mep = mep_search(fin, 1);
    ctx.expect("finite_field_projective.orphan_found", true, orphan.orphan.has_value(), Source::Computed);
    ctx.expect("finite_field_projective.mep_found", true, mep.found.has_value(), Source::Computed);
    return Json{{"q", q}, {"orphan", to_json(orphan.verdict())}, {"mep", to_json(mep.verdict())}};
  });
  harness_section(ctx, {pattern(ctx.ca, {0}, Json::array({Json::array({0, 1})}))});
}

void run_dominant(RunContext& ctx) {
  ctx.analysis("image", [&] {
    auto w = window_image_dim(ctx.ca, FiniteSubset(ctx.ca.group(), {GroupElement::vector({0})}), ctx.field);
    ctx.expect("image.generators", Json::array(), Json(w.closure.generator_strings()), Source::Published);
    ctx.expect("image.dim", 2, w.dim.value(), Source::Published);
    return Json{{"dim", w.dim.value()}, {"closure", w.closure.generator_strings()}};
  });
  ctx.analysis("orphan", [&] {
    auto missing = pattern(ctx.ca, {0}, Json::array({Json::array({0, 1})}));
    auto reached = pattern(ctx.ca, {0}, Json::array({Json::array({1, 1})}));
    auto a = orphan_certify(ctx.ca, missing, missing.support, ctx.field);
    auto b = orphan_certify(ctx.ca, reached, reached.support, ctx.field);
    ctx.expect("orphan.point_0_1", "certified", to_string(a.kind), Source::Published);
    ctx.expect("orphan.point_1_1_consistent", true, b.witness["consistent"], Source::Published);
    return Json{{"point_0_1", to_json(a)}, {"point_1_1", to_json(b)}};
  });
  mdim_section(ctx, 2, Source::Published);
  harness_section(ctx, {pattern(ctx.ca, {0}, Json::array({Json::array({0, 1})}))});
}

void run_product(RunContext& ctx) {
  ctx.analysis("mdim", [&] {
    auto r = mdim_estimate(ctx.ca, ctx.options.m_max, ctx.field);
    Json dims = Json::array(), expected = Json::array();
    for (const auto& row : r.rows) {
      dims.push_back(row.dim);
      expected.push_back(2 * row.m + 1);
    }
    ctx.expect("mdim.dims", expected, dims, Source::Published);
    ctx.expect("mdim.ratios", repeated(r.rows.size(), rational_json(mpq_class(1))), ratios(r), Source::Published);
    ctx.expect("mdim.estimate", rational_json(mpq_class(1)), rational_json(r.estimate), Source::Published);
    auto j = to_json(r);
    ctx.set_mdim(std::move(r));
    return j;
  });
  ctx.analysis("orphan", [&] {
    auto d = pattern(ctx.ca, {-1, 0, 1}, {1, 0, 1});
    auto v = orphan_certify(ctx.ca, d, d.support, ctx.field);
    ctx.expect("orphan.kind", "certified", to_string(v.kind), Source::Published);
    return to_json(v);
  });
  ctx.analysis("starstar", [&] {
    auto v = starstar_check(ctx.ca, box(1, 0, 0), 0, ctx.options.seed, ctx.field);
    ctx.expect("starstar.kind", "certified", to_string(v.kind), Source::Computed);
    return to_json(v);
  });
  harness_section(ctx, {pattern(ctx.ca, {-1, 0, 1}, {1, 0, 1})});
}

void run_free_group(RunContext& ctx) {
  ctx.analysis("matrix", [&] {
    auto lw = linear_window_matrix(ctx.ca, ball(ctx.ca.group(), 1));
    Json shape = Json::array({lw.matrix.rows(), lw.matrix.cols()});
    ctx.expect("matrix.shape_ball_1", Json::array({10, 34}), shape, Source::Computed);
    return Json{{"shape", shape}};
  });
  ctx.analysis("preinjectivity", [&] {
    std::vector<std::int64_t> radii{0, 1, 2};
    auto v = linear_preinjectivity(ctx.ca, radii);
    ctx.expect("preinjectivity.kind", "certified", to_string(v.kind), Source::Computed);
    return to_json(v);
  });
  ctx.analysis("orphan", [&] {
    Json out = Json::object();
    Json first = nullptr;
    for (std::int64_t r = 0; r <= 3 && first.is_null(); ++r) {
      auto v = linear_orphan(ctx.ca, ball(ctx.ca.group(), static_cast<int>(r)));
      out["radius_" + std::to_string(r)] = to_json(v);
      if (v.certified()) first = r;
    }
    ctx.expect("orphan.found_within_radius_3", true, !first.is_null(), Source::Computed);
    out["first_radius"] = first;
    return out;
  });
  ctx.analysis("mdim", [&]() -> Json {
    try {
      mdim_estimate(ctx.ca, 0, ctx.field);
      ctx.expect("mdim.non_amenable", true, false, Source::Immediate);
      return {{"error", nullptr}};
    } catch (const NonAmenableGroup& e) {
      ctx.expect("mdim.non_amenable", true, true, Source::Immediate);
      return {{"error", e.what()}};
    }
  });
}

void run_hyperplane(RunContext& ctx) {
  auto delta = pattern(ctx.ca, {0}, Json::array({Json::array({0, 1})}));
  ctx.analysis("preinjectivity", [&] {
    std::vector<std::int64_t> radii{0};
    auto v = linear_preinjectivity(ctx.ca, radii);
    ctx.expect("preinjectivity.kind", "refuted", to_string(v.kind), Source::Computed);
    if (v.refuted())
      ctx.expect("preinjectivity.kernel", to_json(delta), v.witness["kernel_configuration"], Source::Computed);
    return to_json(v);
  });
  ctx.analysis("hyperplane", [&] {
    auto v = hyperplane_equivalence(ctx.ca, delta.support, delta);
    ctx.expect("hyperplane.kind", "certified", to_string(v.kind), Source::Published);
    return to_json(v);
  });
  ctx.analysis("star_candidate", [&] {
    auto sym = symmetrize_memory(ctx.ca);
    auto window = neighborhood(neighborhood(delta.support, sym.memory()), sym.memory());
    auto poly = algebraic_form(ctx.ca);
    auto vars = window_variables(poly, window);
    // H: the first coordinate on which the kernel configuration is nonzero vanishes.
    auto site = *window.index_of(GroupElement::vector({0}));
    Ideal h = Ideal::parse(vars, std::vector<std::string>{vars[site * 2 + 1]});
    auto v = star_check_candidate(ctx.ca, window, h, 8, ctx.options.seed, ctx.field);
    ctx.expect("star_candidate.kind", "refuted", to_string(v.kind), Source::Computed);
    return to_json(v);
  });
  ctx.analysis("mep", [&] {
    auto r = mep_search(ctx.ca, 4);
    ctx.expect("mep.window", 1, r.found ? Json(r.found->window.size()) : Json(nullptr), Source::Computed);
    return to_json(r.verdict());
  });
  ctx.analysis("orphan", [&] {
    auto one = linear_orphan(ctx.ca, box(1, 0, 0));
    auto two = linear_orphan(ctx.ca, box(1, 0, 1));
    ctx.expect("orphan.kinds", Json::array({"refuted", "certified"}),
               Json::array({to_string(one.kind), to_string(two.kind)}), Source::Computed);
    return Json{{"size_1", to_json(one)}, {"size_2", to_json(two)}};
  });
  ctx.analysis("mdim", [&] {
    auto r = mdim_estimate(ctx.ca, ctx.options.m_max, ctx.field);
    Json dims = Json::array(), expected = Json::array();
    for (const auto& row : r.rows) {
      dims.push_back(row.dim);
      expected.push_back(static_cast<std::int64_t>(row.size) + 1);
    }
    ctx.expect("mdim.dims", expected, dims, Source::Computed);
    auto j = to_json(r);
    ctx.set_mdim(std::move(r));
    return j;
  });
}

Json entropy_json(const std::vector<EntropyTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Json row{{"m", t.m}, {"size", t.window_size}, {"image_count", integer_json(t.image_count)}};
    if (t.ratio) row["ratio"] = rational_json(*t.ratio);
    out.push_back(row);
  }
  return out;
}

Json entropy_ratios(const std::vector<EntropyTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(t.ratio ? rational_json(*t.ratio) : Json(nullptr));
  return out;
}

void run_constant(RunContext& ctx) {
  ctx.analysis("orphan", [&] {
    auto r = orphan_search(ctx.ca, ctx.options.max_window);
    ctx.expect("orphan.pattern", to_json(pattern(ctx.ca, {0}, {1})), r.orphan ? to_json(*r.orphan) : Json(nullptr),
               Source::Immediate);
    return to_json(r.verdict());
  });
  ctx.analysis("mep", [&] {
    auto r = mep_search(ctx.ca, ctx.options.max_window);
    ctx.expect("mep.window", 1, r.found ? Json(r.found->window.size()) : Json(nullptr), Source::Immediate);
    return to_json(r.verdict());
  });
  ctx.analysis("entropy", [&] {
    auto terms = entropy_estimate(ctx.ca, ctx.options.m_max);
    ctx.expect("entropy.ratios", repeated(terms.size(), rational_json(mpq_class(0))), entropy_ratios(terms),
               Source::Immediate);
    return entropy_json(terms);
  });
}

void run_xor(RunContext& ctx) {
  ctx.analysis("orphan", [&] {
    auto r = orphan_search(ctx.ca, ctx.options.max_window);
    ctx.expect("orphan.found", false, r.orphan.has_value(), Source::Computed);
    return to_json(r.verdict());
  });
  ctx.analysis("mep", [&] {
    auto r = mep_search(ctx.ca, ctx.options.max_window);
    ctx.expect("mep.found", false, r.found.has_value(), Source::Computed);
    return to_json(r.verdict());
  });
  ctx.analysis("entropy", [&] {
    auto terms = entropy_estimate(ctx.ca, std::min<std::int64_t>(ctx.options.m_max, 4));
    ctx.expect("entropy.ratios", repeated(terms.size(), rational_json(mpq_class(1))), entropy_ratios(terms),
               Source::Computed);
    return entropy_json(terms);
  });
}

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> r;
  r.push_back({"intro-squaring-p1", "squaring map on the projective line, affine chart x -> x^2",
               FieldSpec::rationals(),
               [](const FieldSpec& f) {
                 return affine_spec("Z", {0}, f, {"x"}, {}, {0}, {"x_0^2"}, meta(true, true));
               },
               run_squaring});
  r.push_back({"reducible-curve-uv", "contraction (x,y) -> (x,0) on the reducible curve uv = 0, chart w = 1",
               FieldSpec::prime(7),
               [](const FieldSpec& f) {
                 return affine_spec("Z", {0}, f, {"x", "y"}, {"x*y"}, {0, 0}, {"x_0", "0"}, meta(false, true));
               },
               run_reducible});
  r.push_back({"affine-dominant-xrxsP", "dominant non-surjective map (x,y) -> (x^r, x^s P(y)), r = s = 1, P(y) = y",
               FieldSpec::rationals(),
               [](const FieldSpec& f) {
                 return affine_spec("Z", {0}, f, {"x", "y"}, {}, {0, 0}, {"x_0", "x_0*y_0"}, meta(true, false));
               },
               run_dominant});
  r.push_back({"product-rule-z", "product rule c(n) c(n+1) on the affine line", FieldSpec::prime(5),
               [](const FieldSpec& f) {
                 return affine_spec("Z", {0, 1}, f, {"x"}, {}, {1}, {"x_0*x_1"}, meta(true, false));
               },
               run_product});
  r.push_back({"free-group-linear", "free group of rank 2, A = Y x Y with Y = F_p, projection sums",
               FieldSpec::prime(2),
               [](const FieldSpec& f) {
                 Json first = {{1, 0}, {0, 0}}, second = {{0, 1}, {0, 0}};
                 // memory order a, A, b, B
                 return linear_spec("F2", {"a", "A", "b", "B"}, prime_or(f, 2), 2,
                                    Json::array({first, first, second, second}), meta(true, false));
               },
               run_free_group});
  r.push_back({"linear-hyperplane-fixture", "linear CA on Z over F_p^2 ignoring the second input coordinate",
               FieldSpec::prime(2),
               [](const FieldSpec& f) {
                 Json at0 = {{1, 0}, {1, 0}}, at1 = {{1, 0}, {0, 0}};
                 return linear_spec("Z", {0, 1}, prime_or(f, 2), 2, Json::array({at0, at1}), meta(true, false));
               },
               run_hyperplane});
  r.push_back({"finite-constant", "constant CA onto symbol 0 over {0,1}", FieldSpec::prime(2),
               [](const FieldSpec&) { return finite_spec({0}, {"0", "1"}, {0, 0}); }, run_constant});
  r.push_back({"finite-xor", "XOR rule c(n) + c(n+1) mod 2", FieldSpec::prime(2),
               [](const FieldSpec&) { return finite_spec({0, 1}, {"0", "1"}, {0, 1, 1, 0}); }, run_xor});
  return r;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build_registry();
  return entries;
}

const RegistryEntry& find_entry(std::string_view id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw UnknownEntry("unknown registry entry: " + std::string(id));
}

Report run_analyses(const CellularAutomaton& ca, const std::string& label, const RunOptions& options,
                    const std::function<void(RunContext&)>& body) {
  Report report;
  report.entry = label;
  report.spec_digest = "fnv1a64:" + fnv1a_hex(serialize_spec(ca));
  report.seed = options.seed;
  report.m_max = options.m_max;
  FieldSpec field = options.field ? *options.field : ca.field().value_or(FieldSpec::prime(2));
  report.field = ca.field() ? field.to_string() : "none";
  RunContext ctx(ca, field, options, report);
  body(ctx);
  return report;
}

Report run_registry(std::string_view id, const RunOptions& options) {
  const auto& entry = find_entry(id);
  const FieldSpec field = options.field.value_or(entry.default_field);
  auto ca = entry.make(field);
  RunOptions opts = options;
  opts.field = field;
  return run_analyses(ca, entry.id, opts, entry.run);
}

std::string mdim_csv(const Report& report) {
  std::ostringstream out;
  out << "m,size,dim,num,den\n";
  if (report.mdim)
    for (const auto& row : report.mdim->rows)
      out << row.m << ',' << row.size << ',' << row.dim << ',' << row.ratio.get_num().get_str() << ','
          << row.ratio.get_den().get_str() << '\n';
  return out.str();
}

void emit_report(const Report& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream json(dir / "report.json");
  std::ofstream csv(dir / "mdim.csv");
  if (!json || !csv) throw std::runtime_error("cannot write report files under " + dir.string());
  json << report.to_json().dump(2) << '\n';
  csv << mdim_csv(report);
  if (!json || !csv) throw std::runtime_error("failed writing report files under " + dir.string());
}

}  // namespace edenca
