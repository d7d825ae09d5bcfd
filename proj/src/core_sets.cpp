#include "deltatop/core_sets.hpp"

#include <algorithm>
#include <unordered_set>

namespace deltatop {

bool canonical_less(const PtSet& a, const PtSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  // Equal cardinality: the first differing point decides; the set holding the
  // smaller differing point sorts first.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

std::vector<PtSet> all_subsets(std::size_t n) {
  if (n > 20) throw OutOfRange("subset enumeration limited to 20 points");
  std::vector<PtSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(n, m);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

SetFamily::SetFamily(std::size_t carrier_size, std::vector<PtSet> sets) : n_(carrier_size) {
  sets_.reserve(sets.size());
  for (const auto& s : sets) insert(s);
}

bool SetFamily::insert(const PtSet& s) {
  if (s.carrier_size() != n_) {
    throw MalformedInput("family member over " + std::to_string(s.carrier_size()) +
                         " points in a family over " + std::to_string(n_));
  }
  if (contains(s)) return false;
  sets_.push_back(s);
  return true;
}

bool SetFamily::contains(const PtSet& s) const {
  return std::find(sets_.begin(), sets_.end(), s) != sets_.end();
}

PtSet SetFamily::union_all() const {
  PtSet u = PtSet::empty(n_);
  for (const auto& s : sets_) u = u | s;
  return u;
}

PtSet SetFamily::intersection_all() const {
  PtSet u = PtSet::full(n_);
  for (const auto& s : sets_) u = u & s;
  return u;
}

SetFamily SetFamily::sorted() const {
  SetFamily out(*this);
  std::sort(out.sets_.begin(), out.sets_.end(), canonical_less);
  return out;
}

bool operator==(const SetFamily& a, const SetFamily& b) {
  if (a.n_ != b.n_ || a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const PtSet& s) { return b.contains(s); });
}

bool family_is_topology(const SetFamily& fam, std::size_t n) {
  if (fam.carrier_size() != n) throw MalformedInput("family carrier does not match n");
  std::unordered_set<std::uint64_t> members;
  for (const auto& s : fam) {
    if (s.carrier_size() != n) throw MalformedInput("family member carrier does not match n");
    members.insert(s.bits());
  }
  if (!members.contains(0) || !members.contains(PtSet::full_mask(n))) return false;
  for (const auto& a : fam) {
    for (const auto& b : fam) {
      if (!members.contains(a.bits() | b.bits()) || !members.contains(a.bits() & b.bits())) return false;
    }
  }
  return true;
}

std::string default_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "p" + std::to_string(i);
}

}  // namespace deltatop
