#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edenca/ca.hpp"
#include "edenca/verdict.hpp"

namespace edenca {

// <prefix><coord>_<site> for every site of the window (canonical order) and
// every coordinate; site labels are made identifier-safe ("-" becomes "m").
std::vector<std::string> window_variables(const CellularAutomaton& ca, const FiniteSubset& window,
                                          const std::string& prefix = "");
// The ideal of X^window in window_variables(ca, window).
Ideal product_ideal(const CellularAutomaton& ca, const FiniteSubset& window);

// Polynomial form of an algebraic or linear CA.
CellularAutomaton algebraic_form(const CellularAutomaton& ca);

// Checks that the components map X^M into X: every generator of I(X), composed
// with the components, reduces to zero modulo the product ideal.
Verdict validate_rule(const AffineVariety& x, const FiniteSubset& memory, std::span<const IntPoly> components,
                      const FieldSpec& field);

enum class Sign { Plus, Minus };

struct InducedMap {
  FiniteSubset source;
  FiniteSubset target;
  Ideal domain;  // X^source in window_variables(source)
  std::vector<std::string> target_variables;
  std::vector<IntPoly> components;  // one per target variable, in the domain's variables
};

// f⁺_Ω : X^{Ω⁺} → X^Ω or f⁻_Ω : X^Ω → X^{Ω⁻}.
InducedMap induced_map(const CellularAutomaton& ca, const FiniteSubset& omega, Sign sign);

struct WindowImage {
  FiniteSubset window;
  Ideal closure;  // in the target variables of induced_map(plus)
  Dimension dim = Dimension::empty();
};

WindowImage window_image_dim(const CellularAutomaton& ca, const FiniteSubset& omega, const FieldSpec& field);

struct MdimRow {
  std::int64_t m = 0;
  std::size_t size = 0;
  std::int64_t dim = 0;
  mpq_class ratio;
};

struct MdimReport {
  FieldSpec field;
  std::int64_t dim_x = 0;
  std::vector<MdimRow> rows;
  std::int64_t tail_start = 0;
  mpq_class estimate;  // max ratio over m >= tail_start

  bool bounded() const;
};

// Ratios dim(Γ_{F_m}) / |F_m| along the centered boxes.
MdimReport mdim_estimate(const CellularAutomaton& ca, std::int64_t m_max, const FieldSpec& field);

// Certified when the preimage system for `target` on Ω has no point over the
// algebraic closure.
Verdict orphan_certify(const CellularAutomaton& ca, const Pattern& target, const FiniteSubset& omega,
                       const FieldSpec& field);

// Searches boundary values q on Ω⁺ \ Ω with dim τ⁺_Ω(A^Ω × {q}) = |Ω| dim(X).
Verdict starstar_check(const CellularAutomaton& ca, const FiniteSubset& omega, std::size_t samples,
                       std::uint64_t seed, const FieldSpec& field);

// Compares τ((A^Ω)_p) and τ(H_p) over F_q points for sampled boundaries p.
// `h` must use window_variables(ca, omega).
Verdict star_check_candidate(const CellularAutomaton& ca, const FiniteSubset& omega, const Ideal& h,
                             std::size_t samples, std::uint64_t seed, const FieldSpec& field);

struct TilingBoundRow {
  std::int64_t m = 0;
  std::size_t size = 0;
  std::size_t tiles = 0;
  std::int64_t full = 0;   // |F_m| dim(X)
  std::int64_t bound = 0;  // |F_m| dim(X) - |T_m|
};

// Upper bounds for dim(Γ_{F_m}) when every tile translate gE carries a
// constraint of dimension h_dim ≤ |E| dim(X) - 1.
std::vector<TilingBoundRow> tiling_deficit_bound(const GroupSpec& group, const FiniteSubset& tile,
                                                 std::int64_t dim_x, std::int64_t h_dim, std::int64_t m_max);

// Dimension of X^F cut down by `tile_ideal` (in window_variables(ca, E)) on
// every tile of `tiling` inside F.
Dimension tile_constrained_dimension(const CellularAutomaton& ca, const Tiling& tiling, const FiniteSubset& f,
                                     const Ideal& tile_ideal, const FieldSpec& field);

struct HarnessCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct HarnessReport {
  MdimReport mdim;
  std::vector<Verdict> starstar;  // F_0 .. F_{m_max}
  std::vector<Verdict> orphans;   // one per target
  std::optional<Verdict> finite_field_orphan;
  bool mdim_full = false;
  bool starstar_all = false;
  bool orphan_found = false;
  std::vector<HarnessCheck> checks;

  bool consistent() const;
};

HarnessReport equivalence_harness(const CellularAutomaton& ca, std::int64_t m_max, std::size_t samples,
                                  std::uint64_t seed, const FieldSpec& field, std::span<const Pattern> targets);

Json to_json(const MdimReport& r);
Json to_json(const HarnessReport& r);

}  // namespace edenca
