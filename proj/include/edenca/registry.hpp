#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edenca/algca.hpp"
#include "edenca/ca.hpp"
#include "edenca/verdict.hpp"

namespace edenca {

inline constexpr const char* kVersion = "0.1.0";

class UnknownEntry : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Where an expected value comes from: a published statement, an independent
// computation, or something immediate from the definitions.
enum class Source { Published, Computed, Immediate };
std::string to_string(Source s);

struct Comparison {
  std::string key;
  Json expected;
  Json observed;
  Source source = Source::Computed;
  bool passed = false;
};

struct Report {
  std::string entry;
  std::string spec_digest;
  std::uint64_t seed = 0;
  std::string field;
  std::int64_t m_max = 0;
  std::map<std::string, Json> analyses;  // ordered by name
  std::vector<Comparison> comparisons;
  std::map<std::string, std::int64_t> timings_ms;
  std::optional<MdimReport> mdim;

  bool passed() const;
  // Everything except timings; byte-identical across runs with equal inputs.
  Json analysis_json() const;
  Json to_json() const;
};

struct RunOptions {
  std::optional<FieldSpec> field;
  std::int64_t m_max = 3;
  std::uint64_t seed = 42;
  std::size_t max_window = 8;
};

class RunContext;

struct RegistryEntry {
  std::string id;
  std::string description;
  FieldSpec default_field;
  std::function<CellularAutomaton(const FieldSpec&)> make;
  std::function<void(RunContext&)> run;
};

class RunContext {
 public:
  RunContext(const CellularAutomaton& ca, FieldSpec field, const RunOptions& options, Report& report)
      : ca(ca), field(field), options(options), report_(report) {}

  // Runs `fn`, storing its JSON under `name` along with the elapsed time.
  void analysis(const std::string& name, const std::function<Json()>& fn);
  void expect(const std::string& key, Json expected, Json observed, Source source);
  void set_mdim(MdimReport r) { report_.mdim = std::move(r); }

  const CellularAutomaton& ca;
  FieldSpec field;
  const RunOptions& options;

 private:
  Report& report_;
};

const std::vector<RegistryEntry>& registry();
const RegistryEntry& find_entry(std::string_view id);

Report run_registry(std::string_view id, const RunOptions& options = {});
// Runs a list of named analyses on an arbitrary CA; used by the CLI check verb.
Report run_analyses(const CellularAutomaton& ca, const std::string& label, const RunOptions& options,
                    const std::function<void(RunContext&)>& body);

// report.json (full) and mdim.csv (m,size,dim,num,den) under `dir`.
void emit_report(const Report& report, const std::filesystem::path& dir);
std::string mdim_csv(const Report& report);

}  // namespace edenca
