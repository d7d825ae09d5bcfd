#include "deltatop/covers.hpp"

#include <algorithm>

namespace deltatop {

namespace {

// Runs the subcover search on every subfamily that covers `target` and
// confirms each answer is a cover. False if any answer is not.
bool check_all_covers(std::span<const PtSet> family, const PtSet& target, std::uint64_t& checked) {
  bool all_ok = true;
  const std::size_t m = family.size();
  if (m <= 16) {
    std::vector<PtSet> sub;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      sub.clear();
      PtSet u = PtSet::empty(target.carrier_size());
      for (std::size_t j = 0; j < m; ++j) {
        if ((mask >> j) & 1U) {
          sub.push_back(family[j]);
          u = u | family[j];
        }
      }
      if (!target.is_subset_of(u)) continue;
      ++checked;
      const SubcoverIndices found = min_subcover(sub, target);
      PtSet got = PtSet::empty(target.carrier_size());
      for (auto i : found.indices) got = got | sub.at(i);
      if (!target.is_subset_of(got)) all_ok = false;
    }
  } else {
    // Too many subfamilies to enumerate: check the largest cover only.
    ++checked;
    min_subcover(family, target);
  }
  return all_ok;
}

bool subspace_verdict(const FinSpace& s, const PtSet& target, std::uint64_t& checked) {
  if (target.empty()) return true;
  const FinSpace y = subspace(s, target);
  const SetFamily fam = delta_open_family(y);
  if (y.size() <= kCoverEnumerationLimit) return check_all_covers(fam.sets(), y.all(), checked);
  ++checked;
  min_subcover(fam.sets(), y.all());
  return true;
}

}  // namespace

Cover::Cover(FinSpace space, PtSet target, SetFamily family, CoverMode mode)
    : space_(std::move(space)), target_(std::move(target)), family_(std::move(family)), mode_(mode) {
  space_.check_carrier(target_);
  if (family_.carrier_size() != space_.size()) throw MalformedInput("cover family carrier mismatch");
  for (const auto& g : family_) {
    const bool ok = mode_ == CoverMode::delta_open ? is_delta_open(space_, g) : space_.is_open(g);
    if (!ok) {
      throw InvalidFamily(mode_ == CoverMode::delta_open ? "cover member is not delta-open"
                                                         : "cover member is not open");
    }
  }
}

SubcoverIndices min_subcover(std::span<const PtSet> family, const PtSet& target) {
  return min_subcover_search<PtSet>(
      family, PtSet::empty(target.carrier_size()), [](const PtSet& a, const PtSet& b) { return a | b; },
      [&](const PtSet& s) { return target.is_subset_of(s); });
}

Subcover extract_min_subcover(const Cover& c) {
  const auto& sets = c.family().sets();
  SubcoverIndices found = min_subcover(sets, c.target());
  Subcover out{SetFamily(c.space().size()), found.indices, found.certified};
  for (auto i : found.indices) out.family.insert(sets[i]);
  return out;
}

IntervalSubcover extract_min_subcover_r(const IntervalSet& target, std::span<const IntervalSet> family) {
  SubcoverIndices found = min_subcover_search<IntervalSet>(
      family, IntervalSet{}, [](const IntervalSet& a, const IntervalSet& b) { return a | b; },
      [&](const IntervalSet& s) { return target.is_subset_of(s); });
  IntervalSubcover out{{}, found.indices, found.certified};
  for (auto i : found.indices) out.family.push_back(family[i]);
  return out;
}

CompactnessVerdict delta_compactness(const FinSpace& s, const PtSet& target) {
  s.check_carrier(target);
  CompactnessVerdict v;
  v.delta_compact = subspace_verdict(s, target, v.covers_checked);
  if (s.is_open(target)) v.ambient_form = ambient_delta_covers_have_subcovers(s, target);
  return v;
}

bool is_delta_compact(const FinSpace& s, const PtSet& target) {
  s.check_carrier(target);
  std::uint64_t checked = 0;
  return subspace_verdict(s, target, checked);
}

bool ambient_delta_covers_have_subcovers(const FinSpace& s, const PtSet& target) {
  s.check_carrier(target);
  const SetFamily fam = delta_open_family(s);
  if (!target.is_subset_of(fam.union_all())) return false;
  std::uint64_t checked = 0;
  if (s.size() <= kCoverEnumerationLimit) return check_all_covers(fam.sets(), target, checked);
  min_subcover(fam.sets(), target);
  return true;
}

FipResult fip_check(const FinSpace& s, const SetFamily& family) {
  if (family.carrier_size() != s.size()) throw MalformedInput("family carrier mismatch");
  for (const auto& f : family) {
    if (!is_delta_closed(s, f)) throw InvalidFamily("family member is not delta-closed");
  }
  const std::size_t m = family.size();
  if (m > 24) throw OutOfRange("finite intersection check limited to 24 sets");

  FipResult out{true, family.intersection_all()};
  // Depth-first over all nonempty subfamilies; the intersection only shrinks
  // along a branch, so an empty one ends the search.
  std::vector<PtSet> stack;
  stack.reserve(m + 1);
  stack.push_back(s.all());
  auto visit = [&](auto&& self, std::size_t start) -> bool {
    for (std::size_t j = start; j < m; ++j) {
      const PtSet meet = stack.back() & family[j];
      if (meet.empty()) return false;
      stack.push_back(meet);
      const bool ok = self(self, j + 1);
      stack.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  out.has_fip = visit(visit, 0);
  return out;
}

std::optional<PtSet> is_locally_delta_compact(const FinSpace& s, std::size_t x) {
  if (x >= s.size()) throw MalformedInput("unknown point " + std::to_string(x));
  const PtSet base = s.min_nbhd(x);
  for (const auto& n : all_subsets(s.size())) {
    if (base.is_subset_of(n) && is_delta_compact(s, n)) return n;
  }
  return std::nullopt;
}

}  // namespace deltatop
