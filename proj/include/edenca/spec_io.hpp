#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "edenca/ca.hpp"
#include "edenca/verdict.hpp"

namespace edenca {

// Malformed or invalid CA spec. Syntax errors carry a 1-based line and column;
// semantic errors leave them at 0.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

GroupSpec parse_group(std::string_view text);
GroupElement parse_element(const GroupSpec& group, const Json& j);

CellularAutomaton parse_spec(std::string_view text);
CellularAutomaton spec_from_json(const Json& j);
Json spec_to_json(const CellularAutomaton& ca);
std::string serialize_spec(const CellularAutomaton& ca);

Pattern pattern_from_json(const GroupSpec& group, const Json& j);
Ideal ideal_from_json(const Json& j);

// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace edenca
