#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "deltatop/core_sets.hpp"
#include "deltatop/finite_space.hpp"
#include "deltatop/real_line.hpp"

namespace deltatop {

enum class CoverMode { open, delta_open };

/// A family of subsets of `space` offered as a cover of `target`. In
/// delta_open mode every member must be delta-open, in open mode open.
class Cover {
 public:
  Cover(FinSpace space, PtSet target, SetFamily family, CoverMode mode);

  const FinSpace& space() const noexcept { return space_; }
  const PtSet& target() const noexcept { return target_; }
  const SetFamily& family() const noexcept { return family_; }
  CoverMode mode() const noexcept { return mode_; }

  bool covers_target() const { return target_.is_subset_of(family_.union_all()); }

 private:
  FinSpace space_;
  PtSet target_;
  SetFamily family_;
  CoverMode mode_;
};

/// Families up to this size get an exact minimum; larger ones a greedy, non-certified answer.
inline constexpr std::size_t kExactSubcoverLimit = 20;
/// Subspaces up to this size have every delta-open cover enumerated by is_delta_compact.
inline constexpr std::size_t kCoverEnumerationLimit = 4;

struct SubcoverIndices {
  std::vector<std::size_t> indices;  // ascending positions into the input family
  bool certified = true;             // false when the greedy fallback produced it
};

/// Minimum-cardinality subfamily covering a target, over any set type. `covers(s)`
/// reports whether `s` contains the target. Among minimum subfamilies the
/// lexicographically smallest index sequence wins.
template <class Set, class Unite, class Covers>
SubcoverIndices min_subcover_search(std::span<const Set> family, const Set& empty, Unite unite, Covers covers) {
  const std::size_t m = family.size();
  std::vector<Set> suffix(m + 1, empty);
  for (std::size_t i = m; i-- > 0;) suffix[i] = unite(family[i], suffix[i + 1]);
  if (!covers(suffix[0])) throw NotACover("family does not cover the target");

  SubcoverIndices out;
  if (m > kExactSubcoverLimit) {
    // Reverse-delete: drop each member whose removal keeps the cover.
    std::vector<bool> keep(m, true);
    for (std::size_t i = m; i-- > 0;) {
      keep[i] = false;
      Set u = empty;
      for (std::size_t j = 0; j < m; ++j) {
        if (keep[j]) u = unite(u, family[j]);
      }
      if (!covers(u)) keep[i] = true;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (keep[j]) out.indices.push_back(j);
    }
    out.certified = false;
    return out;
  }

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::size_t, const Set&)> dfs = [&](std::size_t start, std::size_t left,
                                                                       const Set& current) -> bool {
    if (left == 0) return covers(current);
    for (std::size_t j = start; j + left <= m; ++j) {
      // Everything from j on cannot complete the cover: later j only shrink the suffix.
      if (!covers(unite(current, suffix[j]))) return false;
      chosen.push_back(j);
      if (dfs(j + 1, left - 1, unite(current, family[j]))) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t k = 0; k <= m; ++k) {
    chosen.clear();
    if (dfs(0, k, empty)) {
      out.indices = chosen;
      return out;
    }
  }
  throw NotACover("family does not cover the target");
}

struct Subcover {
  SetFamily family;
  std::vector<std::size_t> indices;
  bool certified = true;
};

/// Throws NotACover if the family does not cover the target.
Subcover extract_min_subcover(const Cover& c);
/// Same search without mode validation; used on families already known to be of the right kind.
SubcoverIndices min_subcover(std::span<const PtSet> family, const PtSet& target);

struct IntervalSubcover {
  std::vector<IntervalSet> family;
  std::vector<std::size_t> indices;
  bool certified = true;
};

/// Real-line counterpart of extract_min_subcover.
IntervalSubcover extract_min_subcover_r(const IntervalSet& target, std::span<const IntervalSet> family);

struct CompactnessVerdict {
  /// Every delta-open cover of the subspace on the target has a finite subcover.
  bool delta_compact = false;
  /// Every cover of the target by delta-open sets of the ambient space has a
  /// finite subcover; only evaluated when the target is open.
  std::optional<bool> ambient_form;
  std::uint64_t covers_checked = 0;
};

CompactnessVerdict delta_compactness(const FinSpace& s, const PtSet& target);
bool is_delta_compact(const FinSpace& s, const PtSet& target);
/// The ambient-cover form of delta-compactness for any target (open or not).
bool ambient_delta_covers_have_subcovers(const FinSpace& s, const PtSet& target);

struct FipResult {
  bool has_fip = false;
  PtSet total_intersection;
};

/// Finite intersection property of a family of delta-closed sets. Throws
/// InvalidFamily if a member is not delta-closed.
FipResult fip_check(const FinSpace& s, const SetFamily& family);

/// A delta-compact neighbourhood of x (a superset of its minimal open
/// neighbourhood), smallest in canonical order, or nullopt if none exists.
std::optional<PtSet> is_locally_delta_compact(const FinSpace& s, std::size_t x);

}  // namespace deltatop
