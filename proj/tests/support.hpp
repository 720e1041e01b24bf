#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "edenca/ca.hpp"
#include "edenca/spec_io.hpp"

namespace edenca::testing {

inline Json meta(bool irreducible, bool complete) {
  return {{"irreducible", irreducible}, {"complete", complete}};
}

inline CellularAutomaton affine(Json memory, const std::string& field, std::vector<std::string> coords,
                                std::vector<std::string> ideal, Json basepoint, std::vector<std::string> rule,
                                Json metadata = meta(true, false), const char* group = "Z") {
  Json j{{"format", 1},
         {"group", group},
         {"memory", std::move(memory)},
         {"alphabet", {{"kind", "affine"}, {"field", field}, {"coordinates", coords}, {"ideal", ideal}}},
         {"rule", {{"kind", "polynomial"}, {"components", rule}}},
         {"metadata", std::move(metadata)}};
  if (!basepoint.is_null()) j["alphabet"]["basepoint"] = std::move(basepoint);
  return spec_from_json(j);
}

inline CellularAutomaton finite(Json memory, std::size_t k, std::vector<std::int64_t> outputs,
                                const char* group = "Z") {
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < k; ++i) symbols.push_back(std::to_string(i));
  Json j{{"format", 1},
         {"group", group},
         {"memory", std::move(memory)},
         {"alphabet", {{"kind", "finite"}, {"symbols", symbols}}},
         {"rule", {{"kind", "table"}, {"outputs", outputs}}}};
  return spec_from_json(j);
}

inline CellularAutomaton linear(Json memory, int p, int n, Json blocks, const char* group = "Z") {
  Json j{{"format", 1},
         {"group", group},
         {"memory", std::move(memory)},
         {"alphabet", {{"kind", "linear"}, {"field", "fp:" + std::to_string(p)}, {"dimension", n}}},
         {"rule", {{"kind", "linear"}, {"blocks", std::move(blocks)}}}};
  return spec_from_json(j);
}

// Named fixtures.
inline CellularAutomaton product_rule(const std::string& field = "fp:5") {
  return affine({0, 1}, field, {"x"}, {}, {1}, {"x_0*x_1"});
}
inline CellularAutomaton contraction(const std::string& field = "fp:7") {
  return affine({0}, field, {"x", "y"}, {"x*y"}, {0, 0}, {"x_0", "0"}, meta(false, true));
}
inline CellularAutomaton affine_identity(const std::string& field = "fp:5") {
  return affine({0}, field, {"x"}, {}, {0}, {"x_0"}, meta(true, true));
}
inline CellularAutomaton and_rule() { return finite({0, 1}, 2, {0, 0, 0, 1}); }
inline CellularAutomaton xor_rule() { return finite({0, 1}, 2, {0, 1, 1, 0}); }
inline CellularAutomaton identity_rule(std::size_t k = 2) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(static_cast<std::int64_t>(i));
  return finite({0}, k, out);
}
inline CellularAutomaton constant_rule() { return finite({0}, 2, {0, 0}); }
// (a_n + a_{n+1}, a_n) over F_2^2: the second input coordinate is ignored.
inline CellularAutomaton hyperplane_fixture() {
  return linear({0, 1}, 2, 2, Json::array({Json{{1, 0}, {1, 0}}, Json{{1, 0}, {0, 0}}}));
}
inline CellularAutomaton free_group_example(int p = 2) {
  Json first = {{1, 0}, {0, 0}}, second = {{0, 1}, {0, 0}};
  return linear({"a", "A", "b", "B"}, p, 2, Json::array({first, first, second, second}), "F2");
}

inline Pattern pattern(const GroupSpec& g, Json support, Json values) {
  return pattern_from_json(g, {{"support", std::move(support)}, {"values", std::move(values)}});
}

inline std::vector<std::int64_t> random_table(std::mt19937_64& rng, std::size_t k, std::size_t memory) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < memory; ++i) n *= k;
  std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(k) - 1);
  std::vector<std::int64_t> out(n);
  for (auto& v : out) v = d(rng);
  return out;
}

// Brute-force oracles for 1-D finite CA with memory {0, ..., r}; tables are
// indexed with the first memory element most significant.
namespace oracle {

inline std::int64_t rule(const std::vector<std::int64_t>& table, std::size_t k, const std::int64_t* cells,
                         std::size_t r) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i <= r; ++i) idx = idx * k + static_cast<std::size_t>(cells[i]);
  return table[idx];
}

inline bool next_word(std::vector<std::int64_t>& w, std::size_t k) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (++w[i] < static_cast<std::int64_t>(k)) return true;
    w[i] = 0;
  }
  return false;
}

inline std::vector<std::int64_t> image(const std::vector<std::int64_t>& table, std::size_t k, std::size_t r,
                                       const std::vector<std::int64_t>& in) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i + r < in.size(); ++i) out.push_back(rule(table, k, in.data() + i, r));
  return out;
}

// Lexicographically first length-s word with no preimage.
inline std::optional<std::vector<std::int64_t>> orphan(const std::vector<std::int64_t>& table, std::size_t k,
                                                       std::size_t r, std::size_t s) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> in(s + r, 0);
  do seen.insert(image(table, k, r, in));
  while (next_word(in, k));
  std::vector<std::int64_t> w(s, 0);
  do
    if (!seen.contains(w)) return w;
  while (next_word(w, k));
  return std::nullopt;
}

// Two distinct fillings of [0, s) with a common r-wide collar on both sides
// and identical images.
inline bool has_mep(const std::vector<std::int64_t>& table, std::size_t k, std::size_t r, std::size_t s) {
  std::vector<std::int64_t> collar(2 * r, 0);
  do {
    std::map<std::vector<std::int64_t>, int> images;
    std::vector<std::int64_t> mid(s, 0);
    do {
      std::vector<std::int64_t> in(collar.begin(), collar.begin() + static_cast<std::ptrdiff_t>(r));
      in.insert(in.end(), mid.begin(), mid.end());
      in.insert(in.end(), collar.begin() + static_cast<std::ptrdiff_t>(r), collar.end());
      if (++images[image(table, k, r, in)] > 1) return true;
    } while (next_word(mid, k));
  } while (next_word(collar, k));
  return false;
}

// Number of distinct images of length s.
inline std::size_t image_count(const std::vector<std::int64_t>& table, std::size_t k, std::size_t r, std::size_t s) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> in(s + r, 0);
  do seen.insert(image(table, k, r, in));
  while (next_word(in, k));
  return seen.size();
}

// Plain Gaussian elimination rank over F_p.
inline std::size_t rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    for (; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  std::size_t rk = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
    std::size_t piv = rk;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rk]);
    const auto s = inv(m[rk][c]);
    for (auto& x : m[rk]) x = x * s % p;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != rk && m[i][c] != 0) {
        const auto f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[rk][j]) % p;
      }
    ++rk;
  }
  return rk;
}

}  // namespace oracle
}  // namespace edenca::testing
