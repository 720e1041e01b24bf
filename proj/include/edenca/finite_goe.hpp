#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edenca/ca.hpp"
#include "edenca/linalg.hpp"
#include "edenca/verdict.hpp"

namespace edenca {

// Which image computation to use. Auto picks the transition graph on Z and
// enumeration elsewhere.
enum class SearchPath { Auto, Enumeration, TransitionGraph };

// Search windows: [0, s-1]^d on Z^d, the ball of radius s-1 on free groups.
FiniteSubset search_window(const GroupSpec& group, std::size_t size);
// [-r, r]^d on Z^d, the ball of radius r on free groups.
FiniteSubset radius_window(const GroupSpec& group, std::int64_t r);
// Sites whose image depends on Ω: Ω M⁻¹.
FiniteSubset affected_window(const FiniteSubset& omega, const FiniteSubset& memory);

struct OrphanSearchResult {
  std::size_t max_window = 0;  // largest window size completed
  std::optional<Pattern> orphan;
  std::uint64_t nodes = 0;  // preimages enumerated or graph nodes visited
  std::string method;

  Verdict verdict() const;
};

// Increasing window sizes from 1 to max_window; the lexicographically first
// orphan at the smallest size is returned. Enumeration stops early, with the
// completed size recorded, once a window exceeds `limit` preimages.
OrphanSearchResult orphan_search(const CellularAutomaton& ca, std::size_t max_window,
                                 SearchPath path = SearchPath::Auto, std::uint64_t limit = 1u << 24);

struct MutuallyErasablePair {
  FiniteSubset window;  // Ω
  Pattern boundary;     // on Ω M⁻¹ M \ Ω
  Pattern u, v;         // distinct, on Ω
};

struct MepResult {
  std::size_t max_window = 0;
  std::optional<MutuallyErasablePair> found;
  std::uint64_t nodes = 0;
  std::string method;

  Verdict verdict() const;
};

// Pairs u ≠ v on Ω that agree with a common boundary and have the same image
// on the affected window Ω M⁻¹.
MepResult mep_search(const CellularAutomaton& ca, std::size_t max_window, SearchPath path = SearchPath::Auto,
                     std::uint64_t limit = 1u << 24);

// Re-evaluates a reported pair.
bool verify_mep(const CellularAutomaton& ca, const MutuallyErasablePair& pair);
// Re-checks by enumeration that `orphan` has no preimage on its window.
bool verify_orphan(const CellularAutomaton& ca, const Pattern& orphan, std::uint64_t limit = 1u << 24);

struct EntropyTerm {
  std::int64_t m = 0;
  std::size_t window_size = 0;
  std::size_t alphabet_size = 0;
  mpz_class image_count;
  // log_{|A|}(image_count) / |F_m| when image_count is a power of |A|.
  std::optional<mpq_class> ratio;

  bool full() const;
};

// |Γ_{F_m}| for the centered boxes F_m, m = 0..m_max.
std::vector<EntropyTerm> entropy_estimate(const CellularAutomaton& ca, std::int64_t m_max,
                                          SearchPath path = SearchPath::Auto, std::uint64_t limit = 1u << 24);

struct LinearWindowMatrix {
  FiniteSubset window;  // Ω, row blocks
  FiniteSubset source;  // Ω M, column blocks
  std::size_t n = 1;
  std::uint64_t p = 2;
  FpDense matrix{0, 0};
};

LinearWindowMatrix linear_window_matrix(const CellularAutomaton& ca, const FiniteSubset& omega);

// Looks for a nonzero kernel configuration supported in the radius-r window
// for each requested radius.
Verdict linear_preinjectivity(const CellularAutomaton& ca, std::span<const std::int64_t> radii);
// Rank test on τ⁺_Ω; an orphan is read off the left kernel.
Verdict linear_orphan(const CellularAutomaton& ca, const FiniteSubset& omega);
// Builds H ⊂ A^{Ω⁺⁺} complementary to c and compares τ over H_p and over the
// whole window for every boundary p on the collar, by enumeration.
Verdict hyperplane_equivalence(const CellularAutomaton& ca, const FiniteSubset& omega, const Pattern& kernel_config,
                               std::uint64_t limit = 1u << 24);

Json to_json(const Pattern& p);

}  // namespace edenca
