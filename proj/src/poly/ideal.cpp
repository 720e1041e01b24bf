#include "edenca/poly/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

namespace edenca {

PolyRing<IntegerRing> integer_ring(std::size_t nvars) { return {IntegerRing{}, nvars}; }

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables)
      : text_(text), ring_(integer_ring(variables.size())) {
    for (std::size_t i = 0; i < variables.size(); ++i) index_.emplace(variables[i], i);
  }

  IntPoly parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    auto p = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PolynomialParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" +
                                   std::string(text_) + "\"",
                               pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPoly expression() {
    IntPoly acc = term();
    while (true) {
      if (accept('+'))
        acc = ring_.add(acc, term());
      else if (accept('-'))
        acc = ring_.sub(acc, term());
      else
        return acc;
    }
  }

  IntPoly term() {
    IntPoly acc = unary();
    while (accept('*')) acc = ring_.mul(acc, unary());
    return acc;
  }

  IntPoly unary() {
    if (accept('-')) return ring_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  IntPoly power() {
    IntPoly base = atom();
    if (accept('^')) {
      skip_space();
      auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 6) fail("exponent too large");
      base = ring_.pow(base, static_cast<std::uint32_t>(std::stoul(std::string(digits))));
    }
    return base;
  }

  IntPoly atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ring_.constant(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      return ring_.variable(it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  PolyRing<IntegerRing> ring_;
  std::unordered_map<std::string, std::size_t> index_;
};

template <class Field>
Polynomial<Field> to_field(const IntPoly& f, const PolyRing<Field>& ring) {
  const auto& k = ring.coeffs();
  return map_coefficients(f, ring, [&k](const mpz_class& c) { return k.from_integer(c); });
}

IntPoly to_integer(const Polynomial<PrimeField>& f, const PrimeField& k, std::size_t nvars) {
  std::vector<Term<IntegerRing>> terms;
  for (const auto& t : f.terms) terms.push_back({t.exponents, k.lift(t.coeff)});
  return integer_ring(nvars).from_terms(std::move(terms));
}

IntPoly to_integer(const Polynomial<RationalField>& f, const RationalField&, std::size_t nvars) {
  mpz_class den = 1, num = 0;
  for (const auto& t : f.terms) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  if (num == 0) num = 1;
  std::vector<Term<IntegerRing>> terms;
  for (const auto& t : f.terms) {
    mpz_class v = t.coeff.get_num() * (den / t.coeff.get_den()) / num;
    terms.push_back({t.exponents, v});
  }
  auto out = integer_ring(nvars).from_terms(std::move(terms));
  return out;
}

template <class Field>
std::vector<Polynomial<Field>> field_basis(const Ideal& ideal, const PolyRing<Field>& ring) {
  std::vector<Polynomial<Field>> gens;
  gens.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) gens.push_back(to_field(g, ring));
  return buchberger(ring, std::move(gens));
}

void check_distinct(const std::vector<std::string>& names) {
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate variable names in ideal");
}

}  // namespace

IntPoly parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).parse();
}

std::string format_polynomial(const IntPoly& f, std::span<const std::string> variables) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms) {
    mpz_class c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables[i];
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

Ideal Ideal::parse(std::vector<std::string> variables, std::span<const std::string> generators) {
  check_distinct(variables);
  Ideal ideal{std::move(variables), {}};
  for (const auto& g : generators) {
    auto p = parse_polynomial(g, ideal.variables);
    if (!p.is_zero()) ideal.generators.push_back(std::move(p));
  }
  return ideal;
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(format_polynomial(g, variables));
  return out;
}

std::int64_t Dimension::value() const {
  if (!value_) throw std::logic_error("dimension of the empty variety has no numeric value");
  return *value_;
}

std::string Dimension::to_string() const { return value_ ? std::to_string(*value_) : "empty"; }

Dimension dimension_from_leading_monomials(std::span<const Exponents> leading, std::size_t nvars) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : leading) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) s.push_back(i);
    if (s.empty()) return Dimension::empty();
    supports.push_back(std::move(s));
  }
  // Supersets of other supports are implied constraints.
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& s : supports) {
    bool implied = std::any_of(minimal.begin(), minimal.end(), [&s](const auto& t) {
      return std::includes(s.begin(), s.end(), t.begin(), t.end());
    });
    if (!implied) minimal.push_back(s);
  }

  std::vector<char> chosen(nvars, 0);
  std::size_t best = nvars + 1;
  auto search = [&](auto&& self, std::size_t used) -> void {
    if (used >= best) return;
    const std::vector<std::size_t>* unhit = nullptr;
    for (const auto& s : minimal) {
      bool hit = std::any_of(s.begin(), s.end(), [&chosen](std::size_t v) { return chosen[v] != 0; });
      if (!hit && (unhit == nullptr || s.size() < unhit->size())) unhit = &s;
    }
    if (unhit == nullptr) {
      best = used;
      return;
    }
    if (used + 1 >= best) return;
    for (std::size_t v : *unhit) {
      chosen[v] = 1;
      self(self, used + 1);
      chosen[v] = 0;
    }
  };
  search(search, 0);
  return Dimension::of(static_cast<std::int64_t>(nvars - best));
}

std::vector<IntPoly> groebner_basis(const Ideal& ideal, const FieldSpec& field, MonomialOrder order) {
  return with_field(field, [&](const auto& k) {
    PolyRing ring(k, ideal.nvars(), order);
    auto basis = field_basis(ideal, ring);
    std::vector<IntPoly> out;
    for (const auto& g : basis) out.push_back(to_integer(g, k, ideal.nvars()));
    return out;
  });
}

IntPoly reduce_modulo(const IntPoly& f, const Ideal& ideal, const FieldSpec& field) {
  return with_field(field, [&](const auto& k) {
    PolyRing ring(k, ideal.nvars());
    auto basis = field_basis(ideal, ring);
    auto r = normal_form(ring, to_field(f, ring), std::span<const decltype(ring.zero())>(basis));
    return to_integer(r, k, ideal.nvars());
  });
}

bool ideal_member(const IntPoly& f, const Ideal& ideal, const FieldSpec& field) {
  return reduce_modulo(f, ideal, field).is_zero();
}

bool empty_over_closure(const Ideal& ideal, const FieldSpec& field) {
  return krull_dimension(ideal, field).is_empty();
}

Dimension krull_dimension(const Ideal& ideal, const FieldSpec& field) {
  return with_field(field, [&](const auto& k) {
    PolyRing ring(k, ideal.nvars());
    auto basis = field_basis(ideal, ring);
    if (is_unit_basis(basis)) return Dimension::empty();
    std::vector<Exponents> leading;
    for (const auto& g : basis) leading.push_back(g.leading_monomial());
    return dimension_from_leading_monomials(leading, ideal.nvars());
  });
}

Ideal eliminate(const Ideal& ideal, std::span<const std::string> eliminated, const FieldSpec& field) {
  const std::size_t n = ideal.nvars();
  std::vector<char> out(n, 0);
  for (const auto& name : eliminated) {
    auto it = std::find(ideal.variables.begin(), ideal.variables.end(), name);
    if (it == ideal.variables.end())
      throw std::invalid_argument("cannot eliminate unknown variable '" + name + "'");
    out[static_cast<std::size_t>(it - ideal.variables.begin())] = 1;
  }
  // Permutation: eliminated variables first, the rest after, original order kept.
  std::vector<std::size_t> to_block(n), from_block(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (out[i]) to_block[i] = next++;
  const std::size_t k_out = next;
  for (std::size_t i = 0; i < n; ++i)
    if (!out[i]) to_block[i] = next++;
  for (std::size_t i = 0; i < n; ++i) from_block[to_block[i]] = i;

  Ideal result;
  std::vector<std::size_t> keep_index(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (!out[i]) {
      keep_index[i] = result.variables.size();
      result.variables.push_back(ideal.variables[i]);
    }

  auto ring_int = integer_ring(n);
  Ideal permuted{std::vector<std::string>(n), {}};
  for (const auto& g : ideal.generators) permuted.generators.push_back(rename_variables(g, to_block, ring_int));

  auto basis = groebner_basis(permuted, field, MonomialOrder::eliminate_first(k_out));
  auto ring_out = integer_ring(result.variables.size());
  std::vector<std::size_t> back(n, 0);
  for (std::size_t b = 0; b < n; ++b) back[b] = out[from_block[b]] ? 0 : keep_index[from_block[b]];
  for (const auto& g : basis) {
    bool touches = std::any_of(g.terms.begin(), g.terms.end(), [k_out](const auto& t) {
      for (std::size_t v = 0; v < k_out; ++v)
        if (t.exponents[v] != 0) return true;
      return false;
    });
    if (!touches) result.generators.push_back(rename_variables(g, back, ring_out));
  }
  return result;
}

Ideal image_closure(std::span<const IntPoly> map, const Ideal& domain, std::vector<std::string> target_variables,
                    const FieldSpec& field) {
  if (map.size() != target_variables.size())
    throw std::invalid_argument("image_closure: one target variable per map component required");
  const std::size_t ns = domain.nvars(), nt = target_variables.size();
  Ideal joint;
  joint.variables = domain.variables;
  joint.variables.insert(joint.variables.end(), target_variables.begin(), target_variables.end());
  check_distinct(joint.variables);

  auto ring = integer_ring(ns + nt);
  std::vector<std::size_t> embed(ns);
  std::iota(embed.begin(), embed.end(), std::size_t{0});
  for (const auto& g : domain.generators) joint.generators.push_back(rename_variables(g, embed, ring));
  for (std::size_t j = 0; j < nt; ++j) {
    if (!map[j].terms.empty() && map[j].terms.front().exponents.size() != ns)
      throw std::invalid_argument("image_closure: map component not in the domain's variables");
    joint.generators.push_back(ring.sub(ring.variable(ns + j), rename_variables(map[j], embed, ring)));
  }
  return eliminate(joint, domain.variables, field);
}

mpz_class evaluate(const IntPoly& f, std::span<const mpz_class> point) {
  mpz_class total = 0;
  for (const auto& t : f.terms) {
    mpz_class v = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), t.exponents[i]);
      v *= p;
    }
    total += v;
  }
  return total;
}

std::uint64_t evaluate_mod(const IntPoly& f, std::span<const std::uint64_t> point, const PrimeField& k) {
  std::uint64_t total = 0;
  for (const auto& t : f.terms) {
    std::uint64_t v = k.from_integer(t.coeff);
    for (std::size_t i = 0; i < t.exponents.size() && v != 0; ++i)
      for (std::uint32_t e = 0; e < t.exponents[i]; ++e) v = k.mul(v, point[i]);
    total = k.add(total, v);
  }
  return total;
}

IntPoly substitute(const IntPoly& f, std::span<const std::optional<mpz_class>> assignment) {
  std::vector<Term<IntegerRing>> terms;
  for (const auto& t : f.terms) {
    Term<IntegerRing> out{t.exponents, t.coeff};
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0 || !assignment[i]) continue;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), assignment[i]->get_mpz_t(), t.exponents[i]);
      out.coeff *= p;
      out.exponents[i] = 0;
    }
    terms.push_back(std::move(out));
  }
  return integer_ring(f.terms.empty() ? assignment.size() : f.terms.front().exponents.size())
      .from_terms(std::move(terms));
}

}  // namespace edenca
