#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltatop/core_sets.hpp"

namespace deltatop {

/// A finite topological space. Immutable; the minimal open neighbourhood of
/// every point is precomputed at construction.
class FinSpace {
 public:
  /// Validates that `opens` is a topology on `labels.size()` points.
  static FinSpace from_opens(std::vector<std::string> labels, SetFamily opens);
  static FinSpace from_opens(SetFamily opens);

  /// Builds the topology whose opens are all unions of the given minimal
  /// neighbourhoods. Requires x in N(x) and y in N(x) => N(y) subset of N(x).
  static FinSpace from_min_neighborhoods(std::vector<std::string> labels, std::vector<PtSet> nbhds);
  static FinSpace from_min_neighborhoods(std::vector<PtSet> nbhds);

  static FinSpace discrete(std::size_t n);
  static FinSpace indiscrete(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  Point point(std::size_t i) const { return Point{i, labels_.at(i)}; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const SetFamily& opens() const noexcept { return opens_; }
  const PtSet& min_nbhd(std::size_t x) const { return min_nbhd_.at(x); }
  const std::vector<PtSet>& min_nbhds() const noexcept { return min_nbhd_; }

  PtSet all() const { return PtSet::full(size()); }
  PtSet none() const { return PtSet::empty(size()); }

  /// The least open set containing `a`: the union of the minimal neighbourhoods of its points.
  PtSet open_hull(const PtSet& a) const;

  bool is_open(const PtSet& a) const;
  bool is_closed(const PtSet& a) const;

  void check_carrier(const PtSet& a) const;

 private:
  FinSpace(std::vector<std::string> labels, SetFamily opens, std::vector<PtSet> nbhds)
      : labels_(std::move(labels)), opens_(std::move(opens)), min_nbhd_(std::move(nbhds)) {}

  static void check_labels(const std::vector<std::string>& labels);

  std::vector<std::string> labels_;
  SetFamily opens_;
  std::vector<PtSet> min_nbhd_;
};

std::vector<std::string> default_labels(std::size_t n);

PtSet interior(const FinSpace& s, const PtSet& a);
PtSet closure(const FinSpace& s, const PtSet& a);

bool is_regular_open(const FinSpace& s, const PtSet& a);
bool is_regular_closed(const FinSpace& s, const PtSet& a);
SetFamily regular_open_family(const FinSpace& s);
SetFamily regular_closed_family(const FinSpace& s);

/// Every point of `a` lies in a regular open set contained in `a`.
bool is_delta_open(const FinSpace& s, const PtSet& a);
/// Points x with a meeting int(cl(U)) for every open U containing x.
PtSet delta_closure(const FinSpace& s, const PtSet& a);
/// `a` equals the intersection of all regular closed supersets of `a` (X if there are none).
bool is_delta_closed(const FinSpace& s, const PtSet& a);
SetFamily delta_open_family(const FinSpace& s);
SetFamily delta_closed_family(const FinSpace& s);

/// Subspace topology on `y`. Points keep their labels and are reindexed in ascending order.
FinSpace subspace(const FinSpace& s, const PtSet& y);
/// Re-expresses `a` (a subset of `y`) in the point indices of subspace(s, y).
PtSet restrict_to(const PtSet& y, const PtSet& a);
/// Inverse of restrict_to: lifts a subset of the subspace back into the ambient carrier.
PtSet lift_from(const PtSet& y, const PtSet& b);

struct SeparationProfile {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  bool regular = false;
  bool t3 = false;
  bool normal = false;
  bool t4 = false;

  friend bool operator==(const SeparationProfile&, const SeparationProfile&) = default;
};

SeparationProfile separation_profile(const FinSpace& s);

/// Every singleton is open.
bool is_discrete(const FinSpace& s);

/// x and y lie in disjoint open sets.
bool strongly_separated(const FinSpace& s, std::size_t x, std::size_t y);

/// Separates x from b by disjoint delta-open sets (U containing b, V containing x),
/// assembled as the union / intersection of per-point witnesses. Empty when some
/// point of b admits no disjoint delta-open pair. Throws PreconditionViolation if x is in b.
std::optional<std::pair<PtSet, PtSet>> delta_separate(const FinSpace& s, std::size_t x, const PtSet& b);

}  // namespace deltatop
