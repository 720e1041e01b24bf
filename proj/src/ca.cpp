#include "edenca/ca.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

namespace edenca {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / std::max<std::size_t>(base, 1)) throw CaError("alphabet enumeration too large");
    r *= base;
  }
  return r;
}

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw CaError("value does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

}  // namespace

AffineVariety AffineVariety::affine_space(std::vector<std::string> coordinates) {
  AffineVariety x;
  x.ideal.variables = std::move(coordinates);
  x.basepoint = std::vector<mpz_class>(x.ideal.variables.size(), 0);
  return x;
}

Dimension AffineVariety::dimension(const FieldSpec& field) const { return krull_dimension(ideal, field); }

bool AffineVariety::contains(std::span<const std::int64_t> point, const FieldSpec& field) const {
  if (point.size() != ambient_dimension()) return false;
  if (field.is_prime()) {
    PrimeField k(field.modulus);
    std::vector<std::uint64_t> pt;
    for (auto v : point) pt.push_back(k.from_int(v));
    return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                       [&](const IntPoly& g) { return evaluate_mod(g, pt, k) == 0; });
  }
  std::vector<mpz_class> pt;
  for (auto v : point) pt.emplace_back(static_cast<long>(v));
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const IntPoly& g) { return evaluate(g, pt) == 0; });
}

CellularAutomaton::CellularAutomaton(FiniteSubset memory, Alphabet alphabet, LocalRule rule, CaMetadata metadata)
    : memory_(std::move(memory)), alphabet_(std::move(alphabet)), rule_(std::move(rule)), metadata_(metadata) {
  if (memory_.empty()) throw CaError("memory set must be non-empty");
  const std::size_t m = memory_.size();
  std::visit(
      overloaded{
          [&](const FiniteAlphabet& a) {
            if (a.symbols.empty()) throw CaError("finite alphabet must be non-empty");
            const auto* table = std::get_if<TableRule>(&rule_);
            if (table == nullptr) throw CaError("finite alphabets take a table rule");
            auto expected = checked_power(a.symbols.size(), m, std::size_t{1} << 26);
            if (table->outputs.size() != expected)
              throw CaError("table rule has " + std::to_string(table->outputs.size()) + " entries, expected " +
                            std::to_string(expected));
            for (auto v : table->outputs)
              if (v < 0 || static_cast<std::size_t>(v) >= a.symbols.size())
                throw CaError("table rule output out of range");
          },
          [&](const AffineAlphabet& a) {
            const auto* poly = std::get_if<PolynomialRule>(&rule_);
            if (poly == nullptr) throw CaError("affine alphabets take a polynomial rule");
            const std::size_t n = a.variety.ambient_dimension();
            if (n == 0) throw CaError("affine variety needs at least one coordinate");
            if (poly->components.size() != n)
              throw CaError("polynomial rule needs one component per coordinate");
            for (const auto& c : poly->components)
              if (!c.is_zero() && c.terms.front().exponents.size() != n * m)
                throw CaError("polynomial rule component uses the wrong variable set");
            if (a.variety.basepoint && a.variety.basepoint->size() != n)
              throw CaError("basepoint has the wrong number of coordinates");
          },
          [&](const LinearAlphabet& a) {
            if (!a.field.is_prime()) throw CaError("linear alphabets need a prime field");
            if (a.dimension < 1) throw CaError("linear alphabet dimension must be >= 1");
            const auto* lin = std::get_if<LinearRule>(&rule_);
            if (lin == nullptr) throw CaError("linear alphabets take a linear rule");
            if (lin->blocks.size() != m) throw CaError("linear rule needs one block per memory element");
            const auto n = static_cast<std::size_t>(a.dimension);
            for (const auto& b : lin->blocks) {
              if (b.size() != n) throw CaError("linear rule block has the wrong shape");
              for (const auto& row : b)
                if (row.size() != n) throw CaError("linear rule block has the wrong shape");
            }
          },
      },
      alphabet_);
  if (auto* lin = std::get_if<LinearRule>(&rule_)) {
    PrimeField k(std::get<LinearAlphabet>(alphabet_).field.modulus);
    for (auto& b : lin->blocks)
      for (auto& row : b)
        for (auto& v : row) v = static_cast<std::int64_t>(k.from_int(v));
  }
}

std::size_t CellularAutomaton::coordinate_count() const {
  return std::visit(overloaded{
                        [](const FiniteAlphabet&) -> std::size_t { return 1; },
                        [](const AffineAlphabet& a) { return a.variety.ambient_dimension(); },
                        [](const LinearAlphabet& a) { return static_cast<std::size_t>(a.dimension); },
                    },
                    alphabet_);
}

std::optional<FieldSpec> CellularAutomaton::field() const {
  return std::visit(overloaded{
                        [](const FiniteAlphabet&) -> std::optional<FieldSpec> { return std::nullopt; },
                        [](const AffineAlphabet& a) -> std::optional<FieldSpec> { return a.field; },
                        [](const LinearAlphabet& a) -> std::optional<FieldSpec> { return a.field; },
                    },
                    alphabet_);
}

std::optional<std::size_t> CellularAutomaton::finite_size() const {
  return std::visit(overloaded{
                        [](const FiniteAlphabet& a) -> std::optional<std::size_t> { return a.symbols.size(); },
                        [](const AffineAlphabet&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const LinearAlphabet& a) -> std::optional<std::size_t> {
                          return checked_power(a.field.modulus, static_cast<std::size_t>(a.dimension),
                                               std::size_t{1} << 30);
                        },
                    },
                    alphabet_);
}

std::vector<std::string> CellularAutomaton::rule_variables() const {
  std::vector<std::string> coords;
  if (const auto* a = std::get_if<AffineAlphabet>(&alphabet_)) coords = a->variety.coordinates();
  std::vector<std::string> out;
  for (std::size_t k = 0; k < memory_.size(); ++k)
    for (const auto& c : coords) out.push_back(c + "_" + std::to_string(k));
  return out;
}

Value CellularAutomaton::local_map(std::span<const Value> memory_values) const {
  if (memory_values.size() != memory_.size()) throw CaError("local map arity mismatch");
  return std::visit(
      overloaded{
          [&](const TableRule& t) -> Value {
            const auto base = static_cast<std::int64_t>(std::get<FiniteAlphabet>(alphabet_).symbols.size());
            std::size_t index = 0;
            for (const auto& v : memory_values) index = index * static_cast<std::size_t>(base) + static_cast<std::size_t>(v.at(0));
            return {t.outputs[index]};
          },
          [&](const PolynomialRule& r) -> Value {
            const auto& a = std::get<AffineAlphabet>(alphabet_);
            Value out;
            if (a.field.is_prime()) {
              PrimeField k(a.field.modulus);
              std::vector<std::uint64_t> pt;
              for (const auto& v : memory_values)
                for (auto x : v) pt.push_back(k.from_int(x));
              for (const auto& c : r.components) out.push_back(static_cast<std::int64_t>(evaluate_mod(c, pt, k)));
            } else {
              std::vector<mpz_class> pt;
              for (const auto& v : memory_values)
                for (auto x : v) pt.emplace_back(static_cast<long>(x));
              for (const auto& c : r.components) out.push_back(to_int64(evaluate(c, pt)));
            }
            return out;
          },
          [&](const LinearRule& r) -> Value {
            PrimeField k(std::get<LinearAlphabet>(alphabet_).field.modulus);
            const std::size_t n = coordinate_count();
            std::vector<std::uint64_t> acc(n, 0);
            for (std::size_t m = 0; m < r.blocks.size(); ++m)
              for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                  acc[i] = k.add(acc[i], k.mul(static_cast<std::uint64_t>(r.blocks[m][i][j]),
                                               k.from_int(memory_values[m].at(j))));
            return Value(acc.begin(), acc.end());
          },
      },
      rule_);
}

bool CellularAutomaton::is_valid_value(const Value& v) const {
  return std::visit(overloaded{
                        [&](const FiniteAlphabet& a) {
                          return v.size() == 1 && v[0] >= 0 && static_cast<std::size_t>(v[0]) < a.symbols.size();
                        },
                        [&](const AffineAlphabet& a) {
                          if (a.field.is_prime() &&
                              std::any_of(v.begin(), v.end(), [&](std::int64_t x) {
                                return x < 0 || static_cast<std::uint64_t>(x) >= a.field.modulus;
                              }))
                            return false;
                          return a.variety.contains(v, a.field);
                        },
                        [&](const LinearAlphabet& a) {
                          return v.size() == static_cast<std::size_t>(a.dimension) &&
                                 std::all_of(v.begin(), v.end(), [&](std::int64_t x) {
                                   return x >= 0 && static_cast<std::uint64_t>(x) < a.field.modulus;
                                 });
                        },
                    },
                    alphabet_);
}

Pattern::Pattern(FiniteSubset s, std::vector<Value> v) : support(std::move(s)), values(std::move(v)) {
  if (support.size() != values.size()) throw CaError("pattern needs exactly one value per support element");
}

const Value& Pattern::at(const GroupElement& g) const {
  auto i = support.index_of(g);
  if (!i) throw InsufficientSupport("pattern is not defined at " + g.to_string());
  return values[*i];
}

Pattern Pattern::restrict_to(const FiniteSubset& omega) const {
  std::vector<Value> out;
  out.reserve(omega.size());
  for (const auto& g : omega) out.push_back(at(g));
  return Pattern(omega, std::move(out));
}

std::string Pattern::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) s += ", ";
    s += support[i].to_string() + ":";
    if (values[i].size() == 1) {
      s += std::to_string(values[i][0]);
    } else {
      s += "(";
      for (std::size_t j = 0; j < values[i].size(); ++j) s += (j ? "," : "") + std::to_string(values[i][j]);
      s += ")";
    }
  }
  return s + "}";
}

Value apply_at(const CellularAutomaton& ca, const Pattern& c, const GroupElement& g) {
  std::vector<Value> local;
  local.reserve(ca.memory().size());
  for (const auto& m : ca.memory()) {
    auto site = mul(g, m);
    auto i = c.support.index_of(site);
    if (!i) throw InsufficientSupport("apply_at: gM is not inside the support (missing " + site.to_string() + ")");
    local.push_back(c.values[*i]);
  }
  return ca.local_map(local);
}

Pattern tau_plus(const CellularAutomaton& ca, const FiniteSubset& omega, const Pattern& u) {
  if (!neighborhood(omega, ca.memory()).is_subset_of(u.support))
    throw InsufficientSupport("tau_plus: the pattern must be defined on the neighborhood of the window");
  std::vector<Value> out;
  out.reserve(omega.size());
  for (const auto& g : omega) out.push_back(apply_at(ca, u, g));
  return Pattern(omega, std::move(out));
}

Pattern tau_minus(const CellularAutomaton& ca, const FiniteSubset& omega, const Pattern& u) {
  if (!omega.is_subset_of(u.support))
    throw InsufficientSupport("tau_minus: the pattern must be defined on the window");
  auto inner = interior(omega, ca.memory());
  std::vector<Value> out;
  out.reserve(inner.size());
  for (const auto& g : inner) out.push_back(apply_at(ca, u, g));
  return Pattern(inner, std::move(out));
}

Pattern shift(const GroupElement& g, const Pattern& p) {
  std::vector<std::pair<GroupElement, Value>> moved;
  moved.reserve(p.support.size());
  for (std::size_t i = 0; i < p.support.size(); ++i) moved.emplace_back(mul(g, p.support[i]), p.values[i]);
  std::sort(moved.begin(), moved.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GroupElement> sites;
  std::vector<Value> values;
  for (auto& [s, v] : moved) {
    sites.push_back(std::move(s));
    values.push_back(std::move(v));
  }
  return Pattern(FiniteSubset(p.support.group(), std::move(sites)), std::move(values));
}

namespace {

// Draws alphabet values for randomized checks.
class ValueSampler {
 public:
  explicit ValueSampler(const CellularAutomaton& ca) : ca_(ca) {
    if (const auto* a = std::get_if<AffineAlphabet>(&ca.alphabet())) {
      if (!a->field.is_prime()) throw CaError("alphabet over Q is not sampleable without a bound");
      points_ = enumerate_points(a->variety, a->field.modulus);
      if (points_.empty()) throw CaError("variety has no points over the prime field");
    }
  }

  Value draw(std::mt19937_64& rng) const {
    return std::visit(overloaded{
                          [&](const FiniteAlphabet& a) -> Value {
                            std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(a.symbols.size()) - 1);
                            return {d(rng)};
                          },
                          [&](const AffineAlphabet&) -> Value {
                            std::uniform_int_distribution<std::size_t> d(0, points_.size() - 1);
                            return points_[d(rng)];
                          },
                          [&](const LinearAlphabet& a) -> Value {
                            std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(a.field.modulus) - 1);
                            Value v;
                            for (int i = 0; i < a.dimension; ++i) v.push_back(d(rng));
                            return v;
                          },
                      },
                      ca_.alphabet());
  }

 private:
  const CellularAutomaton& ca_;
  std::vector<Value> points_;
};

}  // namespace

EquivarianceReport check_equivariance(const CellularAutomaton& ca, const FiniteSubset& omega, std::size_t trials,
                                      std::uint64_t seed, WindowMap map) {
  if (!map) map = [&ca](const FiniteSubset& w, const Pattern& u) { return tau_plus(ca, w, u); };
  ValueSampler sampler(ca);
  std::mt19937_64 rng(seed);
  auto shifts = ball(ca.group(), 3);
  std::uniform_int_distribution<std::size_t> pick(0, shifts.size() - 1);
  auto plus = neighborhood(omega, ca.memory());
  EquivarianceReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Value> vals;
    for (std::size_t i = 0; i < plus.size(); ++i) vals.push_back(sampler.draw(rng));
    Pattern u(plus, std::move(vals));
    const auto& g = shifts[pick(rng)];
    auto lhs = map(left_translate(g, omega), shift(g, u));
    auto rhs = shift(g, map(omega, u));
    ++report.trials;
    if (!(lhs == rhs)) {
      report.passed = false;
      report.counterexample = "g=" + g.to_string() + " u=" + u.to_string() + " shifted image " + lhs.to_string() +
                              " != " + rhs.to_string();
      return report;
    }
  }
  return report;
}

CellularAutomaton extend_memory(const CellularAutomaton& ca, const FiniteSubset& larger) {
  if (!ca.memory().is_subset_of(larger)) throw CaError("extend_memory: new memory must contain the old one");
  std::vector<std::size_t> position;
  for (const auto& m : ca.memory()) position.push_back(*larger.index_of(m));
  const std::size_t big = larger.size();

  LocalRule rule = std::visit(
      overloaded{
          [&](const TableRule& t) -> LocalRule {
            const auto base = std::get<FiniteAlphabet>(ca.alphabet()).symbols.size();
            auto total = checked_power(base, big, std::size_t{1} << 26);
            TableRule out;
            out.outputs.resize(total);
            std::vector<std::size_t> digits(big, 0);
            for (std::size_t idx = 0; idx < total; ++idx) {
              std::size_t rest = idx;
              for (std::size_t k = big; k > 0; --k) {
                digits[k - 1] = rest % base;
                rest /= base;
              }
              std::size_t old = 0;
              for (auto p : position) old = old * base + digits[p];
              out.outputs[idx] = t.outputs[old];
            }
            return out;
          },
          [&](const PolynomialRule& r) -> LocalRule {
            const std::size_t n = ca.coordinate_count();
            std::vector<std::size_t> mapping;
            for (std::size_t k = 0; k < position.size(); ++k)
              for (std::size_t j = 0; j < n; ++j) mapping.push_back(position[k] * n + j);
            auto ring = integer_ring(big * n);
            PolynomialRule out;
            for (const auto& c : r.components) out.components.push_back(rename_variables(c, mapping, ring));
            return out;
          },
          [&](const LinearRule& r) -> LocalRule {
            const std::size_t n = ca.coordinate_count();
            LinearRule out;
            out.blocks.assign(big, FpMatrix(n, std::vector<std::int64_t>(n, 0)));
            for (std::size_t k = 0; k < position.size(); ++k) out.blocks[position[k]] = r.blocks[k];
            return out;
          },
      },
      ca.rule());
  return CellularAutomaton(larger, ca.alphabet(), std::move(rule), ca.metadata());
}

CellularAutomaton symmetrize_memory(const CellularAutomaton& ca) {
  auto with_id = set_union(ca.memory(), FiniteSubset(ca.group(), {GroupElement::identity(ca.group())}));
  return extend_memory(ca, set_union(with_id, inverse_set(ca.memory())));
}

CellularAutomaton linear_as_polynomial(const CellularAutomaton& ca) {
  const auto* lin = std::get_if<LinearRule>(&ca.rule());
  if (lin == nullptr) throw CaError("linear_as_polynomial needs a linear rule");
  const auto& alpha = std::get<LinearAlphabet>(ca.alphabet());
  const std::size_t n = static_cast<std::size_t>(alpha.dimension);
  std::vector<std::string> coords;
  if (n == 1)
    coords.push_back("x");
  else
    for (std::size_t j = 0; j < n; ++j) coords.push_back("x" + std::to_string(j + 1));
  const std::size_t m = ca.memory().size();
  auto ring = integer_ring(m * n);
  PrimeField k(alpha.field.modulus);
  PolynomialRule rule;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term<IntegerRing>> terms;
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t j = 0; j < n; ++j) {
        auto c = lin->blocks[b][i][j];
        if (c == 0) continue;
        Exponents e(m * n, 0);
        e[b * n + j] = 1;
        terms.push_back({std::move(e), k.lift(static_cast<std::uint64_t>(c))});
      }
    rule.components.push_back(ring.from_terms(std::move(terms)));
  }
  AffineAlphabet alphabet{AffineVariety::affine_space(coords), alpha.field};
  return CellularAutomaton(ca.memory(), std::move(alphabet), std::move(rule), ca.metadata());
}

std::vector<Value> enumerate_points(const AffineVariety& x, std::uint64_t p, std::uint64_t limit) {
  const std::size_t n = x.ambient_dimension();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / p) throw CaError("point enumeration exceeds the configured limit");
    total *= p;
  }
  FieldSpec field = FieldSpec::prime(p);
  std::vector<Value> out;
  Value v(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = n; i > 0; --i) {
      v[i - 1] = static_cast<std::int64_t>(rest % p);
      rest /= p;
    }
    if (x.contains(v, field)) out.push_back(v);
  }
  return out;
}

std::vector<Value> enumerate_alphabet(const CellularAutomaton& ca) {
  return std::visit(overloaded{
                        [](const FiniteAlphabet& a) {
                          std::vector<Value> out;
                          for (std::size_t i = 0; i < a.symbols.size(); ++i) out.push_back({static_cast<std::int64_t>(i)});
                          return out;
                        },
                        [](const AffineAlphabet& a) {
                          if (!a.field.is_prime()) throw CaError("alphabet over Q is not finitely enumerable");
                          return enumerate_points(a.variety, a.field.modulus);
                        },
                        [](const LinearAlphabet& a) {
                          AffineVariety space = AffineVariety::affine_space(
                              std::vector<std::string>(static_cast<std::size_t>(a.dimension), ""));
                          space.ideal.variables.clear();
                          for (int i = 0; i < a.dimension; ++i) space.ideal.variables.push_back("v" + std::to_string(i));
                          return enumerate_points(space, a.field.modulus);
                        },
                    },
                    ca.alphabet());
}

std::string value_to_string(const CellularAutomaton& ca, const Value& v) {
  if (const auto* a = std::get_if<FiniteAlphabet>(&ca.alphabet())) return a->symbols.at(static_cast<std::size_t>(v.at(0)));
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

CellularAutomaton as_finite_table(const CellularAutomaton& ca) {
  if (ca.has_finite_alphabet()) return ca;
  auto values = enumerate_alphabet(ca);
  std::map<Value, std::int64_t> index;
  FiniteAlphabet alphabet;
  for (std::size_t i = 0; i < values.size(); ++i) {
    index.emplace(values[i], static_cast<std::int64_t>(i));
    alphabet.symbols.push_back(value_to_string(ca, values[i]));
  }
  const std::size_t m = ca.memory().size();
  const std::size_t base = values.size();
  auto total = checked_power(base, m, std::size_t{1} << 26);
  TableRule table;
  table.outputs.resize(total);
  std::vector<Value> local(m);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = m; k > 0; --k) {
      local[k - 1] = values[rest % base];
      rest /= base;
    }
    auto out = ca.local_map(local);
    auto it = index.find(out);
    if (it == index.end()) throw CaError("local rule leaves the alphabet at " + value_to_string(ca, out));
    table.outputs[idx] = it->second;
  }
  return CellularAutomaton(ca.memory(), std::move(alphabet), std::move(table), ca.metadata());
}

}  // namespace edenca
