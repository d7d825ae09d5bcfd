#include "deltatop/finite_space.hpp"

#include <algorithm>
#include <unordered_set>

#include "deltatop/testing.hpp"

namespace deltatop {

namespace {

// Iterates the submasks of `mask` (including 0 and mask itself).
template <class F>
void for_each_submask(std::uint64_t mask, F&& f) {
  std::uint64_t sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(default_label(i));
  return out;
}

void FinSpace::check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw DegenerateInput("a space needs at least one point");
  if (labels.size() > kMaxCarrier) throw OutOfRange("spaces are limited to 64 points");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw MalformedInput("duplicate point label '" + l + "'");
  }
}

FinSpace FinSpace::from_opens(std::vector<std::string> labels, SetFamily opens) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (!family_is_topology(opens, n)) throw MalformedInput("open family is not a topology");
  std::vector<PtSet> nbhds(n, PtSet::full(n));
  for (const auto& u : opens) {
    for (auto x : u.members()) nbhds[x] = nbhds[x] & u;
  }
  return FinSpace(std::move(labels), std::move(opens), std::move(nbhds));
}

FinSpace FinSpace::from_opens(SetFamily opens) {
  auto n = opens.carrier_size();
  return from_opens(default_labels(n), std::move(opens));
}

FinSpace FinSpace::from_min_neighborhoods(std::vector<std::string> labels, std::vector<PtSet> nbhds) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (nbhds.size() != n) throw MalformedInput("one minimal neighbourhood per point required");
  for (std::size_t x = 0; x < n; ++x) {
    if (nbhds[x].carrier_size() != n) throw MalformedInput("neighbourhood carrier mismatch");
    if (!nbhds[x].contains(x)) throw MalformedInput("minimal neighbourhood must contain its point");
    for (auto y : nbhds[x].members()) {
      if (!nbhds[y].is_subset_of(nbhds[x])) throw MalformedInput("minimal neighbourhoods are not transitive");
    }
  }
  std::vector<std::uint64_t> unions{0};
  std::unordered_set<std::uint64_t> seen{0};
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t existing = unions.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const std::uint64_t u = unions[i] | nbhds[x].bits();
      if (seen.insert(u).second) unions.push_back(u);
    }
  }
  std::vector<PtSet> sets;
  sets.reserve(unions.size());
  for (auto u : unions) sets.emplace_back(n, u);
  std::sort(sets.begin(), sets.end(), canonical_less);
  return FinSpace(std::move(labels), SetFamily(n, std::move(sets)), std::move(nbhds));
}

FinSpace FinSpace::from_min_neighborhoods(std::vector<PtSet> nbhds) {
  auto n = nbhds.size();
  return from_min_neighborhoods(default_labels(n), std::move(nbhds));
}

FinSpace FinSpace::discrete(std::size_t n) {
  std::vector<PtSet> nb;
  for (std::size_t i = 0; i < n; ++i) nb.push_back(PtSet::singleton(n, i));
  return from_min_neighborhoods(std::move(nb));
}

FinSpace FinSpace::indiscrete(std::size_t n) {
  return from_min_neighborhoods(std::vector<PtSet>(n, PtSet::full(n)));
}

std::optional<std::size_t> FinSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void FinSpace::check_carrier(const PtSet& a) const {
  if (a.carrier_size() != size()) {
    throw MalformedInput("set over " + std::to_string(a.carrier_size()) + " points used in a " +
                         std::to_string(size()) + "-point space");
  }
}

PtSet FinSpace::open_hull(const PtSet& a) const {
  check_carrier(a);
  PtSet u = none();
  for (auto x : a.members()) u = u | min_nbhd_[x];
  return u;
}

bool FinSpace::is_open(const PtSet& a) const { return open_hull(a) == a; }

bool FinSpace::is_closed(const PtSet& a) const { return is_open(a.complement()); }

PtSet interior(const FinSpace& s, const PtSet& a) {
  s.check_carrier(a);
  PtSet out = s.none();
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.min_nbhd(x).is_subset_of(a)) out = out.with(x);
  }
  return out;
}

PtSet closure(const FinSpace& s, const PtSet& a) { return interior(s, a.complement()).complement(); }

bool is_regular_open(const FinSpace& s, const PtSet& a) {
  if (testing::active_mutation() == testing::Mutation::regular_open_drops_interior) {
    return a == closure(s, a);
  }
  return a == interior(s, closure(s, a));
}

bool is_regular_closed(const FinSpace& s, const PtSet& a) { return a == closure(s, interior(s, a)); }

SetFamily regular_open_family(const FinSpace& s) {
  SetFamily out(s.size());
  for (const auto& a : all_subsets(s.size())) {
    if (is_regular_open(s, a)) out.insert(a);
  }
  return out;
}

SetFamily regular_closed_family(const FinSpace& s) {
  SetFamily out(s.size());
  for (const auto& a : all_subsets(s.size())) {
    if (is_regular_closed(s, a)) out.insert(a);
  }
  return out;
}

bool is_delta_open(const FinSpace& s, const PtSet& a) {
  s.check_carrier(a);
  // a is delta-open iff the regular open sets inside it cover it.
  std::uint64_t covered = 0;
  for_each_submask(a.bits(), [&](std::uint64_t sub) {
    if ((sub & ~covered) != 0 && is_regular_open(s, PtSet(s.size(), sub))) covered |= sub;
  });
  return covered == a.bits();
}

PtSet delta_closure(const FinSpace& s, const PtSet& a) {
  s.check_carrier(a);
  PtSet out = s.none();
  for (std::size_t x = 0; x < s.size(); ++x) {
    // The minimal neighbourhood gives the smallest int(cl(U)) over open U containing x.
    if (interior(s, closure(s, s.min_nbhd(x))).intersects(a)) out = out.with(x);
  }
  return out;
}

bool is_delta_closed(const FinSpace& s, const PtSet& a) {
  s.check_carrier(a);
  std::uint64_t meet = PtSet::full_mask(s.size());
  for_each_submask(a.complement().bits(), [&](std::uint64_t extra) {
    const PtSet sup(s.size(), a.bits() | extra);
    if ((meet & ~sup.bits()) != 0 && is_regular_closed(s, sup)) meet &= sup.bits();
  });
  return meet == a.bits();
}

SetFamily delta_open_family(const FinSpace& s) {
  SetFamily out(s.size());
  for (const auto& a : all_subsets(s.size())) {
    if (is_delta_open(s, a)) out.insert(a);
  }
  return out;
}

SetFamily delta_closed_family(const FinSpace& s) {
  SetFamily out(s.size());
  for (const auto& a : all_subsets(s.size())) {
    if (is_delta_closed(s, a)) out.insert(a);
  }
  return out;
}

PtSet restrict_to(const PtSet& y, const PtSet& a) {
  y.check_same(a);
  if (!a.is_subset_of(y)) throw MalformedInput("set is not inside the subspace");
  std::uint64_t bits = 0;
  std::size_t j = 0;
  for (auto x : y.members()) {
    if (a.contains(x)) bits |= std::uint64_t{1} << j;
    ++j;
  }
  return PtSet(y.count(), bits);
}

PtSet lift_from(const PtSet& y, const PtSet& b) {
  if (b.carrier_size() != y.count()) throw MalformedInput("set is not over the subspace carrier");
  PtSet out = PtSet::empty(y.carrier_size());
  std::size_t j = 0;
  for (auto x : y.members()) {
    if (b.contains(j)) out = out.with(x);
    ++j;
  }
  return out;
}

FinSpace subspace(const FinSpace& s, const PtSet& y) {
  s.check_carrier(y);
  if (y.empty()) throw DegenerateInput("subspace of the empty set");
  std::vector<std::string> labels;
  for (auto x : y.members()) labels.push_back(s.label(x));
  SetFamily opens(y.count());
  for (const auto& u : s.opens()) opens.insert(restrict_to(y, u & y));
  return FinSpace::from_opens(std::move(labels), std::move(opens));
}

bool is_discrete(const FinSpace& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.min_nbhd(x).count() != 1) return false;
  }
  return true;
}

bool strongly_separated(const FinSpace& s, std::size_t x, std::size_t y) {
  if (x >= s.size() || y >= s.size()) throw MalformedInput("point outside carrier");
  return !s.min_nbhd(x).intersects(s.min_nbhd(y));
}

SeparationProfile separation_profile(const FinSpace& s) {
  const std::size_t n = s.size();
  SeparationProfile p;
  p.t0 = p.t1 = p.t2 = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool y_in_nx = s.min_nbhd(x).contains(y);
      const bool x_in_ny = s.min_nbhd(y).contains(x);
      if (y_in_nx && x_in_ny) p.t0 = false;
      if (y_in_nx) p.t1 = false;
      if (!strongly_separated(s, x, y)) p.t2 = false;
    }
  }
  std::vector<PtSet> closed;
  for (const auto& u : s.opens()) closed.push_back(u.complement());

  p.regular = std::all_of(closed.begin(), closed.end(), [&](const PtSet& c) {
    const PtSet hull = s.open_hull(c);
    for (std::size_t x = 0; x < n; ++x) {
      if (!c.contains(x) && hull.intersects(s.min_nbhd(x))) return false;
    }
    return true;
  });
  p.normal = true;
  for (const auto& c : closed) {
    for (const auto& d : closed) {
      if (!c.intersects(d) && s.open_hull(c).intersects(s.open_hull(d))) p.normal = false;
    }
  }
  p.t3 = p.regular && p.t2;
  p.t4 = p.normal && p.t1;
  return p;
}

std::optional<std::pair<PtSet, PtSet>> delta_separate(const FinSpace& s, std::size_t x, const PtSet& b) {
  s.check_carrier(b);
  if (x >= s.size()) throw MalformedInput("point outside carrier");
  if (b.contains(x)) throw PreconditionViolation("delta_separate requires x outside B");
  if (b.empty()) return std::make_pair(s.none(), s.all());

  const SetFamily family = delta_open_family(s).sorted();
  PtSet u = s.none();
  PtSet v = s.all();
  for (auto y : b.members()) {
    bool found = false;
    for (const auto& uy : family) {
      if (!uy.contains(y)) continue;
      for (const auto& vy : family) {
        if (vy.contains(x) && !uy.intersects(vy)) {
          u = u | uy;
          v = v & vy;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return std::make_pair(u, v);
}

}  // namespace deltatop
