#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace edenca {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroupMismatch : public GroupError {
 public:
  using GroupError::GroupError;
};

class NonAmenableGroup : public GroupError {
 public:
  using GroupError::GroupError;
};

// The universe: Z^d or the free group on `rank` generators.
struct GroupSpec {
  enum class Kind { Zd, Free };

  Kind kind = Kind::Zd;
  int rank = 1;

  static GroupSpec lattice(int d);
  static GroupSpec free_group(int rank);

  bool amenable() const { return kind == Kind::Zd; }
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Z^d elements are coordinate vectors. Free group elements are reduced words
// whose letters are encoded 2i for generator i and 2i+1 for its inverse, so
// letter order is a < A < b < B < ...
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(const GroupSpec& group);
  static GroupElement vector(std::vector<std::int64_t> coords);
  static GroupElement word(const GroupSpec& group, std::string_view letters);
  static GroupElement from_letters(const GroupSpec& group, std::span<const std::int64_t> letters);

  const GroupSpec& group() const { return group_; }
  std::span<const std::int64_t> data() const { return data_; }
  bool is_identity() const { return data_.empty() || (group_.kind == GroupSpec::Kind::Zd && all_zero()); }
  // Word length for free groups, l1 norm for Z^d.
  std::int64_t length() const;
  std::string to_string() const;

  // Canonical order: lexicographic on coordinates; shortlex on words.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group_ == b.group_ && a.data_ == b.data_;
  }

 private:
  bool all_zero() const;

  GroupSpec group_;
  std::vector<std::int64_t> data_;
};

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// Ordered, duplicate-free finite subset of a group.
class FiniteSubset {
 public:
  FiniteSubset() = default;
  explicit FiniteSubset(GroupSpec group) : group_(group) {}
  FiniteSubset(GroupSpec group, std::vector<GroupElement> elements);

  const GroupSpec& group() const { return group_; }
  std::span<const GroupElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const GroupElement& g) const;
  std::optional<std::size_t> index_of(const GroupElement& g) const;
  bool is_subset_of(const FiniteSubset& other) const;

  friend bool operator==(const FiniteSubset&, const FiniteSubset&) = default;

 private:
  GroupSpec group_;
  std::vector<GroupElement> elements_;
};

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset set_difference(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset set_intersection(const FiniteSubset& a, const FiniteSubset& b);
// g * S and S * g.
FiniteSubset left_translate(const GroupElement& g, const FiniteSubset& s);
FiniteSubset right_translate(const FiniteSubset& s, const GroupElement& g);
// A * B = {ab}.
FiniteSubset product_set(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset inverse_set(const FiniteSubset& s);

// The M-interior {g : gM ⊆ Ω}.
FiniteSubset interior(const FiniteSubset& omega, const FiniteSubset& memory);
// The M-neighborhood ΩM.
FiniteSubset neighborhood(const FiniteSubset& omega, const FiniteSubset& memory);
// The M-boundary ΩM \ interior.
FiniteSubset boundary(const FiniteSubset& omega, const FiniteSubset& memory);

// [lo, hi]^d in Z^d.
FiniteSubset box(int d, std::int64_t lo, std::int64_t hi);
// Reduced words of length at most r.
FiniteSubset ball(const GroupSpec& group, int r);

// Centered boxes [-m, m]^d; the only Folner sequence offered.
class FolnerSequence {
 public:
  explicit FolnerSequence(GroupSpec group);
  const GroupSpec& group() const { return group_; }
  FiniteSubset set(std::int64_t m) const;

 private:
  GroupSpec group_;
};

FiniteSubset folner_set(const FolnerSequence& seq, std::int64_t m);
// Exact |∂F_m| / |F_m| for m = 0..m_max.
std::vector<mpq_class> boundary_ratio_sequence(const FolnerSequence& seq, const FiniteSubset& memory,
                                               std::int64_t m_max);

struct Tiling {
  FiniteSubset tile;        // E
  FiniteSubset tile_cover;  // E' = E E^{-1}
  FiniteSubset centers;
  FiniteSubset window;
};

// Greedy tiling: scan the window in canonical order and keep g whenever
// gE ⊆ window and gE misses every previously chosen translate.
Tiling make_tiling(const FiniteSubset& tile, const FiniteSubset& window);
// |{g ∈ centers : gE ⊆ F}|.
std::size_t tiling_count_in(const Tiling& tiling, const FiniteSubset& f);

}  // namespace edenca
