#include "edenca/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iterator>

namespace edenca {

namespace {

void require_same(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) throw GroupMismatch("group mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

GroupSpec GroupSpec::lattice(int d) {
  if (d < 1) throw GroupError("Z^d requires d >= 1");
  return {Kind::Zd, d};
}

GroupSpec GroupSpec::free_group(int rank) {
  if (rank < 1 || rank > 26) throw GroupError("free group rank must be between 1 and 26");
  return {Kind::Free, rank};
}

std::string GroupSpec::to_string() const {
  if (kind == Kind::Zd) return rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  return "F" + std::to_string(rank);
}

GroupElement GroupElement::identity(const GroupSpec& group) {
  GroupElement e;
  e.group_ = group;
  if (group.kind == GroupSpec::Kind::Zd) e.data_.assign(static_cast<std::size_t>(group.rank), 0);
  return e;
}

GroupElement GroupElement::vector(std::vector<std::int64_t> coords) {
  GroupElement e;
  e.group_ = GroupSpec::lattice(static_cast<int>(coords.size()));
  e.data_ = std::move(coords);
  return e;
}

GroupElement GroupElement::word(const GroupSpec& group, std::string_view letters) {
  if (group.kind != GroupSpec::Kind::Free) throw GroupError("words only denote free group elements");
  std::vector<std::int64_t> codes;
  for (char c : letters) {
    if (c == 'e' && letters.size() == 1) break;  // "e" names the identity
    bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
    int gen = std::tolower(static_cast<unsigned char>(c)) - 'a';
    if (gen < 0 || gen >= group.rank)
      throw GroupError(std::string("letter '") + c + "' is not a generator of " + group.to_string());
    codes.push_back(2 * gen + (inv ? 1 : 0));
  }
  return from_letters(group, codes);
}

GroupElement GroupElement::from_letters(const GroupSpec& group, std::span<const std::int64_t> letters) {
  GroupElement e;
  e.group_ = group;
  for (auto l : letters) {
    if (!e.data_.empty() && e.data_.back() == (l ^ 1))
      e.data_.pop_back();
    else
      e.data_.push_back(l);
  }
  return e;
}

bool GroupElement::all_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t GroupElement::length() const {
  if (group_.kind == GroupSpec::Kind::Free) return static_cast<std::int64_t>(data_.size());
  std::int64_t s = 0;
  for (auto v : data_) s += std::llabs(v);
  return s;
}

std::string GroupElement::to_string() const {
  if (group_.kind == GroupSpec::Kind::Free) {
    if (data_.empty()) return "e";
    std::string s;
    for (auto l : data_) {
      char c = static_cast<char>('a' + l / 2);
      s += (l % 2) ? static_cast<char>(std::toupper(c)) : c;
    }
    return s;
  }
  if (data_.size() == 1) return std::to_string(data_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < data_.size(); ++i) s += (i ? "," : "") + std::to_string(data_[i]);
  return s + ")";
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (a.group_.kind != b.group_.kind) return a.group_.kind <=> b.group_.kind;
  if (a.group_.rank != b.group_.rank) return a.group_.rank <=> b.group_.rank;
  if (a.group_.kind == GroupSpec::Kind::Free && a.data_.size() != b.data_.size())
    return a.data_.size() <=> b.data_.size();
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                b.data_.end());
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  require_same(g.group(), h.group());
  if (g.group().kind == GroupSpec::Kind::Zd) {
    std::vector<std::int64_t> v(g.data().begin(), g.data().end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += h.data()[i];
    return GroupElement::vector(std::move(v));
  }
  std::vector<std::int64_t> letters(g.data().begin(), g.data().end());
  letters.insert(letters.end(), h.data().begin(), h.data().end());
  return GroupElement::from_letters(g.group(), letters);
}

GroupElement inverse(const GroupElement& g) {
  if (g.group().kind == GroupSpec::Kind::Zd) {
    std::vector<std::int64_t> v(g.data().begin(), g.data().end());
    for (auto& x : v) x = -x;
    return GroupElement::vector(std::move(v));
  }
  std::vector<std::int64_t> letters;
  for (auto it = g.data().rbegin(); it != g.data().rend(); ++it) letters.push_back(*it ^ 1);
  return GroupElement::from_letters(g.group(), letters);
}

FiniteSubset::FiniteSubset(GroupSpec group, std::vector<GroupElement> elements)
    : group_(group), elements_(std::move(elements)) {
  for (const auto& g : elements_) require_same(group_, g.group());
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteSubset::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::optional<std::size_t> FiniteSubset::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || !(*it == g)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteSubset::is_subset_of(const FiniteSubset& other) const {
  if (empty()) return true;
  require_same(group_, other.group_);
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b) {
  require_same(a.group(), b.group());
  std::vector<GroupElement> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FiniteSubset(a.group(), std::move(out));
}

FiniteSubset set_difference(const FiniteSubset& a, const FiniteSubset& b) {
  require_same(a.group(), b.group());
  std::vector<GroupElement> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FiniteSubset(a.group(), std::move(out));
}

FiniteSubset set_intersection(const FiniteSubset& a, const FiniteSubset& b) {
  require_same(a.group(), b.group());
  std::vector<GroupElement> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FiniteSubset(a.group(), std::move(out));
}

FiniteSubset left_translate(const GroupElement& g, const FiniteSubset& s) {
  require_same(g.group(), s.group());
  std::vector<GroupElement> out;
  out.reserve(s.size());
  for (const auto& h : s) out.push_back(mul(g, h));
  return FiniteSubset(s.group(), std::move(out));
}

FiniteSubset right_translate(const FiniteSubset& s, const GroupElement& g) {
  require_same(g.group(), s.group());
  std::vector<GroupElement> out;
  out.reserve(s.size());
  for (const auto& h : s) out.push_back(mul(h, g));
  return FiniteSubset(s.group(), std::move(out));
}

FiniteSubset product_set(const FiniteSubset& a, const FiniteSubset& b) {
  require_same(a.group(), b.group());
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& g : a)
    for (const auto& h : b) out.push_back(mul(g, h));
  return FiniteSubset(a.group(), std::move(out));
}

FiniteSubset inverse_set(const FiniteSubset& s) {
  std::vector<GroupElement> out;
  for (const auto& g : s) out.push_back(inverse(g));
  return FiniteSubset(s.group(), std::move(out));
}

FiniteSubset interior(const FiniteSubset& omega, const FiniteSubset& memory) {
  require_same(omega.group(), memory.group());
  if (memory.empty()) throw GroupError("interior with an empty memory set is all of G");
  // Any g with gM ⊆ Ω satisfies g m0 ∈ Ω, hence g ∈ Ω m0^{-1}.
  auto m0_inv = inverse(memory[0]);
  std::vector<GroupElement> out;
  for (const auto& w : omega) {
    auto g = mul(w, m0_inv);
    bool inside = std::all_of(memory.begin(), memory.end(),
                              [&](const GroupElement& m) { return omega.contains(mul(g, m)); });
    if (inside) out.push_back(std::move(g));
  }
  return FiniteSubset(omega.group(), std::move(out));
}

FiniteSubset neighborhood(const FiniteSubset& omega, const FiniteSubset& memory) {
  return product_set(omega, memory);
}

FiniteSubset boundary(const FiniteSubset& omega, const FiniteSubset& memory) {
  return set_difference(neighborhood(omega, memory), interior(omega, memory));
}

FiniteSubset box(int d, std::int64_t lo, std::int64_t hi) {
  auto group = GroupSpec::lattice(d);
  std::vector<GroupElement> out;
  if (lo > hi) return FiniteSubset(group);
  std::vector<std::int64_t> v(static_cast<std::size_t>(d), lo);
  while (true) {
    out.push_back(GroupElement::vector(v));
    int i = d - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == hi) v[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return FiniteSubset(group, std::move(out));
}

FiniteSubset ball(const GroupSpec& group, int r) {
  if (group.kind == GroupSpec::Kind::Zd) {
    std::vector<GroupElement> out;
    for (const auto& g : box(group.rank, -r, r))
      if (g.length() <= r) out.push_back(g);
    return FiniteSubset(group, std::move(out));
  }
  std::vector<GroupElement> layer{GroupElement::identity(group)};
  std::vector<GroupElement> all = layer;
  for (int len = 1; len <= r; ++len) {
    std::vector<GroupElement> next;
    for (const auto& w : layer)
      for (std::int64_t l = 0; l < 2 * group.rank; ++l) {
        if (!w.data().empty() && w.data().back() == (l ^ 1)) continue;
        std::vector<std::int64_t> letters(w.data().begin(), w.data().end());
        letters.push_back(l);
        next.push_back(GroupElement::from_letters(group, letters));
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return FiniteSubset(group, std::move(all));
}

FolnerSequence::FolnerSequence(GroupSpec group) : group_(group) {
  if (!group.amenable())
    throw NonAmenableGroup(group.to_string() + " is not amenable; it has no Folner sequence");
}

FiniteSubset FolnerSequence::set(std::int64_t m) const { return box(group_.rank, -m, m); }

FiniteSubset folner_set(const FolnerSequence& seq, std::int64_t m) { return seq.set(m); }

std::vector<mpq_class> boundary_ratio_sequence(const FolnerSequence& seq, const FiniteSubset& memory,
                                               std::int64_t m_max) {
  std::vector<mpq_class> out;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    auto f = seq.set(m);
    mpq_class r(static_cast<unsigned long>(boundary(f, memory).size()), static_cast<unsigned long>(f.size()));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

Tiling make_tiling(const FiniteSubset& tile, const FiniteSubset& window) {
  if (tile.empty()) throw GroupError("tiling requires a non-empty tile E");
  require_same(tile.group(), window.group());
  Tiling t;
  t.tile = tile;
  t.tile_cover = product_set(tile, inverse_set(tile));
  t.window = window;
  std::vector<GroupElement> centers;
  std::vector<GroupElement> covered;  // kept sorted
  for (const auto& g : window) {
    auto translate = left_translate(g, tile);
    if (!translate.is_subset_of(window)) continue;
    bool clash = std::any_of(translate.begin(), translate.end(), [&covered](const GroupElement& x) {
      return std::binary_search(covered.begin(), covered.end(), x);
    });
    if (clash) continue;
    centers.push_back(g);
    std::vector<GroupElement> merged;
    std::merge(covered.begin(), covered.end(), translate.begin(), translate.end(), std::back_inserter(merged));
    covered = std::move(merged);
  }
  t.centers = FiniteSubset(window.group(), std::move(centers));
  return t;
}

std::size_t tiling_count_in(const Tiling& tiling, const FiniteSubset& f) {
  if (f.empty()) return 0;
  if (!f.is_subset_of(tiling.window)) throw GroupError("tiling_count_in: F must lie inside the tiling window");
  std::size_t n = 0;
  for (const auto& g : tiling.centers)
    if (left_translate(g, tiling.tile).is_subset_of(f)) ++n;
  return n;
}

}  // namespace edenca
