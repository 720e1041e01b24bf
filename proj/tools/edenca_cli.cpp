#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "edenca/algca.hpp"
#include "edenca/finite_goe.hpp"
#include "edenca/registry.hpp"
#include "edenca/spec_io.hpp"

using namespace edenca;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::parse_error& e) {
    throw SpecError(path + ": " + e.what());
  }
}

void print_report(const Report& report, const std::string& out, bool dump) {
  for (const auto& c : report.comparisons)
    std::cout << (c.passed ? "ok   " : "FAIL ") << c.key << " [" << to_string(c.source) << "]"
              << (c.passed ? "" : "  expected " + c.expected.dump() + " observed " + c.observed.dump()) << '\n';
  if (!out.empty()) {
    emit_report(report, out);
    std::cout << "wrote " << out << "/report.json\n";
  } else if (dump) {
    std::cout << report.analysis_json().dump(2) << '\n';
  }
}

struct CheckArgs {
  std::string spec;
  std::string mode;
  std::string target;
  std::string hyperplane;
  std::size_t window = 1;
  std::size_t samples = 8;
  std::vector<std::int64_t> radii{0, 1, 2};
};

int run_check(const CheckArgs& a, const RunOptions& options, const std::string& out) {
  auto ca = parse_spec(slurp(a.spec));
  auto report = run_analyses(ca, a.spec, options, [&](RunContext& ctx) {
    const auto omega = search_window(ca.group(), a.window);
    if (a.mode == "mdim") {
      ctx.analysis("mdim", [&] {
        auto r = mdim_estimate(ca, options.m_max, ctx.field);
        auto j = to_json(r);
        ctx.set_mdim(std::move(r));
        return j;
      });
    } else if (a.mode == "orphan") {
      ctx.analysis("orphan", [&] {
        if (!a.target.empty()) {
          auto target = pattern_from_json(ca.group(), load_json(a.target));
          return to_json(orphan_certify(ca, target, target.support, ctx.field));
        }
        if (ca.is_linear()) return to_json(linear_orphan(ca, omega));
        return to_json(orphan_search(ca, options.max_window).verdict());
      });
    } else if (a.mode == "mep") {
      ctx.analysis("mep", [&] { return to_json(mep_search(ca, options.max_window).verdict()); });
    } else if (a.mode == "starstar") {
      ctx.analysis("starstar",
                   [&] { return to_json(starstar_check(ca, omega, a.samples, options.seed, ctx.field)); });
    } else if (a.mode == "star") {
      if (a.hyperplane.empty()) throw CLI::ValidationError("--hyperplane", "required for --mode star");
      auto h = ideal_from_json(load_json(a.hyperplane));
      ctx.analysis("star", [&] {
        return to_json(star_check_candidate(ca, omega, h, a.samples, options.seed, ctx.field));
      });
    } else if (a.mode == "linear") {
      ctx.analysis("linear", [&] { return to_json(linear_preinjectivity(ca, a.radii)); });
    }
  });
  print_report(report, out, true);
  return report.passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garden-of-Eden analyses for algebraic cellular automata"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunOptions options;
  std::string field_text;
  std::string out;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", field_text, "q or fp:<prime>");
    sub->add_option("--m-max", options.m_max, "largest Folner index")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-window", options.max_window, "largest search window")->check(CLI::PositiveNumber);
    sub->add_option("--seed", options.seed, "sampling seed");
    sub->add_option("--out", out, "directory for report.json and mdim.csv");
  };

  auto* list = app.add_subcommand("list", "registry entries");

  std::string entry;
  auto* repro = app.add_subcommand("repro", "run a registry entry and compare against expected values");
  repro->add_option("id", entry, "registry entry")->required();
  common(repro);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run one analysis on a spec file");
  check->add_option("--spec", check_args.spec, "CA spec (JSON)")->required()->check(CLI::ExistingFile);
  check->add_option("--mode", check_args.mode, "analysis")
      ->required()
      ->check(CLI::IsMember({"mdim", "orphan", "mep", "starstar", "star", "linear"}));
  check->add_option("--target", check_args.target, "target pattern (JSON) for algebraic orphans")
      ->check(CLI::ExistingFile);
  check->add_option("--hyperplane", check_args.hyperplane, "candidate H (ideal JSON) for --mode star")
      ->check(CLI::ExistingFile);
  check->add_option("--window", check_args.window, "window size")->check(CLI::PositiveNumber);
  check->add_option("--samples", check_args.samples, "sampled boundaries");
  check->add_option("--radii", check_args.radii, "radii for --mode linear");
  common(check);

  std::string ideal_path;
  auto* dim = app.add_subcommand("dim", "Krull dimension of an ideal");
  dim->add_option("--ideal", ideal_path, "ideal JSON {variables, generators}")->required()->check(CLI::ExistingFile);
  common(dim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (!field_text.empty()) options.field = FieldSpec::parse(field_text);

    if (*list) {
      for (const auto& e : registry()) std::cout << e.id << "  " << e.description << '\n';
      return kOk;
    }
    if (*repro) {
      auto report = run_registry(entry, options);
      print_report(report, out, false);
      std::cout << (report.passed() ? "PASS " : "FAIL ") << entry << '\n';
      return report.passed() ? kOk : kMismatch;
    }
    if (*check) return run_check(check_args, options, out);
    if (*dim) {
      auto ideal = ideal_from_json(load_json(ideal_path));
      const auto field = options.field.value_or(FieldSpec::rationals());
      auto d = krull_dimension(ideal, field);
      std::cout << d.to_string() << '\n';
      if (!out.empty()) {
        std::filesystem::create_directories(out);
        Json j{{"format", 1},
               {"tool", "edenca"},
               {"version", kVersion},
               {"variables", ideal.variables},
               {"generators", ideal.generator_strings()},
               {"field", field.to_string()},
               {"dim", d.is_empty() ? Json(nullptr) : Json(d.value())}};
        std::ofstream(std::filesystem::path(out) / "report.json") << j.dump(2) << '\n';
      }
      return kOk;
    }
  } catch (const UnknownEntry& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
