#include "edenca/spec_io.hpp"

#include <charconv>
#include <cstdio>

#include "edenca/algca.hpp"

namespace edenca {

namespace {

std::string located(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::int64_t parse_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
  }
  throw SpecError(where + ": expected an integer");
}

mpz_class parse_big(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw SpecError(where + ": expected an integer");
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where + ": expected a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SpecError(where + ": expected a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

FieldSpec parse_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SpecError(where + ": field must be a string such as \"q\" or \"fp:5\"");
  try {
    return FieldSpec::parse(j.get<std::string>());
  } catch (const FieldError& e) {
    throw SpecError(where + ": " + e.what());
  }
}

IntPoly parse_poly(const std::string& text, const std::vector<std::string>& vars, const std::string& where) {
  try {
    return parse_polynomial(text, vars);
  } catch (const PolynomialParseError& e) {
    throw SpecError(where + ": " + e.what());
  }
}

}  // namespace

SpecError::SpecError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(located(what, line, column)), line_(line), column_(column) {}

GroupSpec parse_group(std::string_view text) {
  try {
    if (text == "Z") return GroupSpec::lattice(1);
    if (text.starts_with("Z^")) return GroupSpec::lattice(std::stoi(std::string(text.substr(2))));
    if (text.starts_with("F")) return GroupSpec::free_group(std::stoi(std::string(text.substr(1))));
  } catch (const std::invalid_argument& e) {
    throw SpecError("group: " + std::string(e.what()));
  }
  throw SpecError("group: unknown group \"" + std::string(text) + "\" (expected Z, Z^d or F<r>)");
}

GroupElement parse_element(const GroupSpec& group, const Json& j) {
  try {
    if (group.kind == GroupSpec::Kind::Free) {
      if (!j.is_string()) throw SpecError("free group elements are written as words");
      return GroupElement::word(group, j.get<std::string>());
    }
    std::vector<std::int64_t> coords;
    if (j.is_array()) {
      for (const auto& c : j) coords.push_back(parse_int(c, "group element"));
    } else if (j.is_string() && j.get_ref<const std::string&>().starts_with("(")) {
      auto s = j.get<std::string>();
      if (s.back() != ')') throw SpecError("malformed group element " + s);
      std::size_t pos = 1;
      while (pos < s.size() - 1) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size() - 1;
        coords.push_back(parse_int(Json(s.substr(pos, comma - pos)), "group element"));
        pos = comma + 1;
      }
    } else {
      coords.push_back(parse_int(j, "group element"));
    }
    if (coords.size() != static_cast<std::size_t>(group.rank))
      throw SpecError("group element " + j.dump() + " does not live in " + group.to_string());
    return GroupElement::vector(std::move(coords));
  } catch (const GroupError& e) {
    throw SpecError(e.what());
  }
}

CellularAutomaton parse_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    auto cut = msg.find("syntax error");
    throw SpecError(cut == std::string::npos ? msg : msg.substr(cut), line, column);
  }
  return spec_from_json(j);
}

CellularAutomaton spec_from_json(const Json& j) {
  if (!j.is_object()) throw SpecError("spec must be a JSON object");
  if (j.contains("format") && parse_int(j.at("format"), "format") != 1)
    throw SpecError("format: only format 1 is supported");
  const auto& gj = require(j, "group", "spec");
  if (!gj.is_string()) throw SpecError("group: expected a string");
  auto group = parse_group(gj.get<std::string>());

  const auto& mj = require(j, "memory", "spec");
  if (!mj.is_array() || mj.empty()) throw SpecError("memory: expected a non-empty list of group elements");
  std::vector<GroupElement> elements;
  for (const auto& e : mj) elements.push_back(parse_element(group, e));
  FiniteSubset memory(group, elements);
  if (memory.size() != elements.size()) throw SpecError("memory: elements must be distinct");

  const auto& aj = require(j, "alphabet", "spec");
  const auto kind = require(aj, "kind", "alphabet").get<std::string>();
  const auto& rj = require(j, "rule", "spec");
  const auto rkind = require(rj, "kind", "rule").get<std::string>();

  CaMetadata meta;
  if (j.contains("metadata")) {
    const auto& md = j.at("metadata");
    meta.irreducible = md.value("irreducible", false);
    meta.complete = md.value("complete", false);
  }

  Alphabet alphabet;
  LocalRule rule;
  if (kind == "finite") {
    alphabet = FiniteAlphabet{string_list(require(aj, "symbols", "alphabet"), "alphabet.symbols")};
    if (rkind != "table") throw SpecError("rule: finite alphabets take a \"table\" rule");
    TableRule t;
    for (const auto& v : require(rj, "outputs", "rule")) t.outputs.push_back(parse_int(v, "rule.outputs"));
    rule = t;
  } else if (kind == "affine") {
    auto field = parse_field(require(aj, "field", "alphabet"), "alphabet.field");
    AffineVariety x;
    x.ideal.variables = string_list(require(aj, "coordinates", "alphabet"), "alphabet.coordinates");
    if (aj.contains("ideal"))
      for (const auto& g : string_list(aj.at("ideal"), "alphabet.ideal"))
        x.ideal.generators.push_back(parse_poly(g, x.ideal.variables, "alphabet.ideal"));
    if (aj.contains("basepoint")) {
      std::vector<mpz_class> bp;
      for (const auto& c : aj.at("basepoint")) bp.push_back(parse_big(c, "alphabet.basepoint"));
      if (bp.size() != x.ambient_dimension()) throw SpecError("alphabet.basepoint: wrong number of coordinates");
      for (const auto& g : x.ideal.generators)
        if (evaluate(g, bp) != 0) throw SpecError("alphabet.basepoint: not a point of the variety");
      x.basepoint = bp;
    }
    if (rkind != "polynomial") throw SpecError("rule: affine alphabets take a \"polynomial\" rule");
    std::vector<std::string> vars;
    for (std::size_t k = 0; k < memory.size(); ++k)
      for (const auto& c : x.coordinates()) vars.push_back(c + "_" + std::to_string(k));
    PolynomialRule pr;
    for (const auto& s : string_list(require(rj, "components", "rule"), "rule.components"))
      pr.components.push_back(parse_poly(s, vars, "rule.components"));
    if (pr.components.size() != x.ambient_dimension())
      throw SpecError("rule.components: one polynomial per coordinate required");
    auto check = validate_rule(x, memory, pr.components, field);
    if (!check.certified())
      throw SpecError("rule: the local map does not send X^M into X (normal form " +
                      check.witness.value("normal_form", std::string("?")) + ")");
    alphabet = AffineAlphabet{std::move(x), field};
    rule = std::move(pr);
  } else if (kind == "linear") {
    auto field = parse_field(require(aj, "field", "alphabet"), "alphabet.field");
    if (!field.is_prime()) throw SpecError("alphabet.field: linear alphabets need a prime field");
    auto dim = parse_int(require(aj, "dimension", "alphabet"), "alphabet.dimension");
    alphabet = LinearAlphabet{field, static_cast<int>(dim)};
    if (rkind != "linear") throw SpecError("rule: linear alphabets take a \"linear\" rule");
    LinearRule lr;
    for (const auto& b : require(rj, "blocks", "rule")) {
      FpMatrix m;
      for (const auto& row : b) {
        std::vector<std::int64_t> r;
        for (const auto& v : row) r.push_back(parse_int(v, "rule.blocks"));
        m.push_back(std::move(r));
      }
      lr.blocks.push_back(std::move(m));
    }
    rule = std::move(lr);
  } else {
    throw SpecError("alphabet.kind: expected finite, affine or linear");
  }
  try {
    return CellularAutomaton(memory, std::move(alphabet), std::move(rule), meta);
  } catch (const CaError& e) {
    throw SpecError(e.what());
  }
}

Json spec_to_json(const CellularAutomaton& ca) {
  Json j;
  j["format"] = 1;
  j["group"] = ca.group().to_string();
  j["memory"] = Json::array();
  for (const auto& m : ca.memory()) j["memory"].push_back(m.to_string());
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, FiniteAlphabet>) {
          j["alphabet"] = {{"kind", "finite"}, {"symbols", a.symbols}};
        } else if constexpr (std::is_same_v<A, AffineAlphabet>) {
          Json aj{{"kind", "affine"}, {"field", a.field.to_string()}, {"coordinates", a.variety.coordinates()}};
          aj["ideal"] = a.variety.ideal.generator_strings();
          if (a.variety.basepoint) {
            aj["basepoint"] = Json::array();
            for (const auto& c : *a.variety.basepoint) aj["basepoint"].push_back(integer_json(c));
          }
          j["alphabet"] = aj;
        } else {
          j["alphabet"] = {{"kind", "linear"}, {"field", a.field.to_string()}, {"dimension", a.dimension}};
        }
      },
      ca.alphabet());
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TableRule>) {
          j["rule"] = {{"kind", "table"}, {"outputs", r.outputs}};
        } else if constexpr (std::is_same_v<R, PolynomialRule>) {
          auto vars = ca.rule_variables();
          Json comps = Json::array();
          for (const auto& c : r.components) comps.push_back(format_polynomial(c, vars));
          j["rule"] = {{"kind", "polynomial"}, {"components", comps}};
        } else {
          j["rule"] = {{"kind", "linear"}, {"blocks", r.blocks}};
        }
      },
      ca.rule());
  j["metadata"] = {{"irreducible", ca.metadata().irreducible}, {"complete", ca.metadata().complete}};
  return j;
}

std::string serialize_spec(const CellularAutomaton& ca) { return spec_to_json(ca).dump(2) + "\n"; }

Pattern pattern_from_json(const GroupSpec& group, const Json& j) {
  const auto& sj = require(j, "support", "pattern");
  const auto& vj = require(j, "values", "pattern");
  if (!sj.is_array() || !vj.is_array() || sj.size() != vj.size())
    throw SpecError("pattern: support and values must be lists of equal length");
  std::vector<std::pair<GroupElement, Value>> cells;
  for (std::size_t i = 0; i < sj.size(); ++i) {
    Value v;
    if (vj[i].is_array())
      for (const auto& x : vj[i]) v.push_back(parse_int(x, "pattern.values"));
    else
      v.push_back(parse_int(vj[i], "pattern.values"));
    cells.emplace_back(parse_element(group, sj[i]), std::move(v));
  }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GroupElement> sites;
  std::vector<Value> values;
  for (auto& [g, v] : cells) {
    sites.push_back(g);
    values.push_back(std::move(v));
  }
  FiniteSubset support(group, sites);
  if (support.size() != sites.size()) throw SpecError("pattern: repeated site");
  return Pattern(support, std::move(values));
}

Ideal ideal_from_json(const Json& j) {
  auto vars = string_list(require(j, "variables", "ideal"), "ideal.variables");
  auto gens = string_list(require(j, "generators", "ideal"), "ideal.generators");
  try {
    return Ideal::parse(vars, gens);
  } catch (const PolynomialParseError& e) {
    throw SpecError(std::string("ideal.generators: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("ideal: ") + e.what());
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace edenca
