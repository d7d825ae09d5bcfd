#include "deltatop/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>

#include "deltatop/covers.hpp"
#include "deltatop/enumerate.hpp"
#include "deltatop/maps.hpp"
#include "deltatop/real_line.hpp"

namespace deltatop {

namespace {

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t hypothesis_true = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> kept;

  template <class Concl, class Describe>
  void check(bool hypothesis, Concl&& conclusion, Describe&& describe) {
    ++total;
    if (!hypothesis) return;
    ++hypothesis_true;
    if (conclusion()) return;
    ++failures;
    if (kept.size() < kKeptCounterexamples) kept.push_back(describe().dump());
  }

  void absorb(Tally&& o) {
    total += o.total;
    hypothesis_true += o.hypothesis_true;
    failures += o.failures;
    for (auto& k : o.kept) {
      if (kept.size() >= kKeptCounterexamples) break;
      kept.push_back(std::move(k));
    }
  }
};

// Lazily computed facts about one space, private to a single check run.
class Facts {
 public:
  explicit Facts(const FinSpace& s) : s(s), subsets(all_subsets(s.size())) {}

  const FinSpace& s;
  const std::vector<PtSet> subsets;

  const SeparationProfile& profile() {
    if (!profile_) profile_ = separation_profile(s);
    return *profile_;
  }
  bool compact(const PtSet& a) {
    auto it = compact_.find(a.bits());
    if (it != compact_.end()) return it->second;
    const bool v = is_delta_compact(s, a);
    compact_.emplace(a.bits(), v);
    return v;
  }
  bool space_compact() { return compact(s.all()); }
  const SetFamily& delta_opens() {
    if (!delta_opens_) delta_opens_ = delta_open_family(s);
    return *delta_opens_;
  }
  const SetFamily& delta_closeds() {
    if (!delta_closeds_) delta_closeds_ = delta_closed_family(s);
    return *delta_closeds_;
  }

 private:
  std::optional<SeparationProfile> profile_;
  std::unordered_map<std::uint64_t, bool> compact_;
  std::optional<SetFamily> delta_opens_;
  std::optional<SetFamily> delta_closeds_;
};

struct MapSide {
  SeparationProfile profile;
  bool compact = false;
};

struct MapCtx {
  const MapSide& dom;
  const MapSide& cod;
};

struct Check {
  std::string id;
  std::string statement;
  std::function<void(Facts&, Tally&)> on_space;
  std::function<void(const SpaceMap&, const MapCtx&, Tally&)> on_map;
  std::function<void(Tally&)> fixtures;
};

Json witness(const FinSpace& s, std::initializer_list<std::pair<const char*, PtSet>> sets) {
  Json j;
  j["space"] = space_to_json(s);
  for (const auto& [name, a] : sets) j[name] = set_to_json(s, a);
  return j;
}

Json point_witness(const FinSpace& s, std::size_t x, std::initializer_list<std::pair<const char*, PtSet>> sets) {
  Json j = witness(s, sets);
  j["x"] = s.label(x);
  return j;
}

Json map_witness(const SpaceMap& f, const std::optional<PtSet>& w) {
  Json j;
  j["map"] = map_to_json(f);
  if (w) j["witness"] = set_to_json(f.dom(), *w);
  return j;
}

PtSet complement_of(const PtSet& a) { return a.complement(); }

// Every subfamily of `fam` (by mask), including the empty one.
template <class F>
void for_each_subfamily(const SetFamily& fam, F&& f) {
  const std::size_t m = fam.size();
  if (m > 20) throw OutOfRange("subfamily sweep over more than 20 sets");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    SetFamily sub(fam.carrier_size());
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) sub.insert(fam[i]);
    }
    f(sub);
  }
}

// Finite T3 spaces are discrete; the T3-hypothesis checks assert it alongside.
void t3_is_discrete(Facts& f, Tally& t) {
  t.check(
      f.profile().t3, [&] { return is_discrete(f.s); }, [&] { return witness(f.s, {}); });
}

Json real_witness(std::initializer_list<std::pair<const char*, IntervalSet>> sets) {
  Json j;
  for (const auto& [name, a] : sets) j[name] = format_interval_set(a);
  return j;
}

IntervalSet iv_open(int a, int b) { return IntervalSet::of(Interval::open(a, b)); }

void relative_regular_open_fixtures(Tally& t) {
  // The half-open subspace: Y is not open, so the hypothesis is false; the
  // worked values are still reproduced and any drift counts as a failure.
  {
    const IntervalSet v = iv_open(1, 2);
    const IntervalSet y = IntervalSet::of(Interval::closed(1, Rat(3, 2)));
    t.check(
        is_regular_open_r(v) && is_open_r(y), [&] { return is_regular_open_in(v & y, y); },
        [&] { return real_witness({{"V", v}, {"Y", y}}); });
    const IntervalSet meet = v & y;
    const IntervalSet expect_meet = IntervalSet::of(Interval{Endpoint::open_at(1), Endpoint::closed_at(Rat(3, 2))});
    t.check(
        true,
        [&] {
          return meet == expect_meet && relative_closure(meet, y) == y && relative_int_cl(v, y) == y &&
                 !is_regular_open_in(meet, y);
        },
        [&] {
          return real_witness({{"V", v},
                               {"Y", y},
                               {"V^Y", meet},
                               {"clY", relative_closure(meet, y)},
                               {"intY clY", relative_int_cl(v, y)}});
        });
  }
  const std::vector<std::pair<IntervalSet, IntervalSet>> cases = {
      {iv_open(1, 2), iv_open(0, 3)},
      {iv_open(0, 1) | iv_open(1, 2), iv_open(0, 2)},
      {iv_open(0, 1) | iv_open(2, 3), IntervalSet::of(Interval::open(Rat(1, 2), Rat(5, 2)))},
      {IntervalSet::of(Interval{Endpoint::infinite(), Endpoint::open_at(0)}), iv_open(-1, 1)},
  };
  for (const auto& [v, y] : cases) {
    t.check(
        is_regular_open_r(v) && is_open_r(y) && !y.empty(), [&] { return is_regular_open_in(v & y, y); },
        [&] { return real_witness({{"V", v}, {"Y", y}}); });
  }
}

void square_map_fixture(Tally& t) {
  const IntervalSet u = iv_open(0, 1);
  const SquareMapCase c = square_map_case(u);
  t.check(
      true,
      [&] {
        const IntervalSet cl = closure_r(c.preimage);
        return c.preimage == (iv_open(-1, 0) | iv_open(0, 1)) && cl == IntervalSet::of(Interval::closed(-1, 1)) &&
               interior_r(cl) == iv_open(-1, 1) && !c.preimage_regular_open && c.u_regular_open &&
               c.preimage_regular_open == is_regular_open_r(c.preimage) && c.u_regular_open == is_regular_open_r(u) &&
               c.theorem_applicability == Verdict::not_applicable;
      },
      [&] { return real_witness({{"U", u}, {"preimage", c.preimage}}); });
}

// The square map is continuous but not open, so it only ever contributes a
// hypothesis-false instance to the preimage theorems.
void square_map_not_applicable(Tally& t) {
  const SquareMapCase c = square_map_case(iv_open(0, 1));
  t.check(
      c.theorem_applicability != Verdict::not_applicable, [&] { return c.preimage_regular_open; },
      [&] { return real_witness({{"U", c.u}, {"preimage", c.preimage}}); });
}

bool is_open_continuous(const MapClass& m) { return m.continuous && m.open; }

std::vector<Check> build_registry() {
  std::vector<Check> r;

  r.push_back({"T2.3", "A is regular closed iff its complement is regular open",
               [](Facts& f, Tally& t) {
                 for (const auto& a : f.subsets) {
                   t.check(
                       true, [&] { return is_regular_closed(f.s, a) == is_regular_open(f.s, complement_of(a)); },
                       [&] { return witness(f.s, {{"A", a}}); });
                 }
               },
               {}, {}});

  r.push_back({"R2.4", "for open U, int(cl(U)) is regular open",
               [](Facts& f, Tally& t) {
                 for (const auto& u : f.subsets) {
                   t.check(
                       f.s.is_open(u), [&] { return is_regular_open(f.s, interior(f.s, closure(f.s, u))); },
                       [&] { return witness(f.s, {{"U", u}}); });
                 }
               },
               {}, {}});

  r.push_back({"T3.2", "A is delta-open iff its complement equals its own delta-closure",
               [](Facts& f, Tally& t) {
                 for (const auto& a : f.subsets) {
                   t.check(
                       true,
                       [&] {
                         const PtSet c = complement_of(a);
                         return is_delta_open(f.s, a) == (delta_closure(f.s, c) == c);
                       },
                       [&] { return witness(f.s, {{"A", a}}); });
                 }
               },
               {}, {}});

  r.push_back({"T3.4", "V regular open and Y open nonempty imply V^Y regular open in the subspace Y",
               [](Facts& f, Tally& t) {
                 for (const auto& y : f.subsets) {
                   const bool y_ok = !y.empty() && f.s.is_open(y);
                   std::optional<FinSpace> sub;
                   if (y_ok) sub = subspace(f.s, y);
                   for (const auto& v : f.subsets) {
                     t.check(
                         y_ok && is_regular_open(f.s, v), [&] { return is_regular_open(*sub, restrict_to(y, v & y)); },
                         [&] { return witness(f.s, {{"V", v}, {"Y", y}}); });
                   }
                 }
               },
               {}, relative_regular_open_fixtures});

  r.push_back({"T3.5", "U delta-open and Y open nonempty imply U^Y delta-open in the subspace Y",
               [](Facts& f, Tally& t) {
                 for (const auto& y : f.subsets) {
                   const bool y_ok = !y.empty() && f.s.is_open(y);
                   std::optional<FinSpace> sub;
                   if (y_ok) sub = subspace(f.s, y);
                   for (const auto& u : f.subsets) {
                     t.check(
                         y_ok && is_delta_open(f.s, u), [&] { return is_delta_open(*sub, restrict_to(y, u & y)); },
                         [&] { return witness(f.s, {{"U", u}, {"Y", y}}); });
                   }
                 }
               },
               {}, {}});

  r.push_back({"T3.7", "V is delta-open iff its complement is delta-closed",
               [](Facts& f, Tally& t) {
                 for (const auto& v : f.subsets) {
                   t.check(
                       true, [&] { return is_delta_open(f.s, v) == is_delta_closed(f.s, complement_of(v)); },
                       [&] { return witness(f.s, {{"V", v}}); });
                 }
               },
               {}, {}});

  r.push_back({"N3.8", "A is delta-closed iff A equals its delta-closure",
               [](Facts& f, Tally& t) {
                 for (const auto& a : f.subsets) {
                   t.check(
                       true, [&] { return is_delta_closed(f.s, a) == (delta_closure(f.s, a) == a); },
                       [&] { return witness(f.s, {{"A", a}}); });
                 }
               },
               {}, {}});

  r.push_back({"T4.3", "for open Y, Y is delta-compact iff every cover of Y by delta-open sets of X has a finite subcover",
               [](Facts& f, Tally& t) {
                 for (const auto& y : f.subsets) {
                   t.check(
                       f.s.is_open(y),
                       [&] {
                         const auto v = delta_compactness(f.s, y);
                         return v.ambient_form.has_value() && v.delta_compact == *v.ambient_form &&
                                v.delta_compact == ambient_delta_covers_have_subcovers(f.s, y);
                       },
                       [&] { return witness(f.s, {{"Y", y}}); });
                 }
               },
               {}, {}});

  r.push_back({"T4.4", "X is delta-compact iff every family of delta-closed sets with the FIP has nonempty intersection",
               [](Facts& f, Tally& t) {
                 bool all_fip_meet = true;
                 for_each_subfamily(f.delta_closeds(), [&](const SetFamily& fam) {
                   if (fam.size() == 0) return;
                   const FipResult r = fip_check(f.s, fam);
                   if (r.has_fip && r.total_intersection.empty()) all_fip_meet = false;
                   t.check(
                       f.space_compact() && r.has_fip, [&] { return !r.total_intersection.empty(); },
                       [&] {
                         Json j = witness(f.s, {});
                         j["family"] = family_to_json(f.s, fam);
                         return j;
                       });
                 });
                 t.check(
                     all_fip_meet, [&] { return f.space_compact(); }, [&] { return witness(f.s, {}); });
               },
               {}, {}});

  r.push_back({"T4.5", "a delta-closed subset of a delta-compact space is delta-compact",
               [](Facts& f, Tally& t) {
                 for (const auto& y : f.subsets) {
                   t.check(
                       f.space_compact() && is_delta_closed(f.s, y), [&] { return f.compact(y); },
                       [&] { return witness(f.s, {{"Y", y}}); });
                 }
               },
               {}, {}});

  r.push_back({"T4.6", "in a regular space every closed set is delta-closed",
               [](Facts& f, Tally& t) {
                 for (const auto& a : f.subsets) {
                   t.check(
                       f.profile().regular && f.s.is_closed(a), [&] { return is_delta_closed(f.s, a); },
                       [&] { return witness(f.s, {{"A", a}}); });
                 }
               },
               {}, {}});

  r.push_back({"C4.7", "in a regular space every open set is delta-open",
               [](Facts& f, Tally& t) {
                 for (const auto& u : f.subsets) {
                   t.check(
                       f.profile().regular && f.s.is_open(u), [&] { return is_delta_open(f.s, u); },
                       [&] { return witness(f.s, {{"U", u}}); });
                 }
               },
               {}, {}});

  r.push_back({"T4.8", "in a regular T2 space distinct points lie in disjoint delta-open sets",
               [](Facts& f, Tally& t) {
                 const bool hyp = f.profile().regular && f.profile().t2;
                 for (std::size_t x = 0; x < f.s.size(); ++x) {
                   for (std::size_t y = 0; y < f.s.size(); ++y) {
                     if (x == y) continue;
                     t.check(
                         hyp,
                         [&] {
                           for (const auto& u : f.delta_opens()) {
                             if (!u.contains(x)) continue;
                             for (const auto& v : f.delta_opens()) {
                               if (v.contains(y) && !u.intersects(v)) return true;
                             }
                           }
                           return false;
                         },
                         [&] {
                           Json j = point_witness(f.s, x, {});
                           j["y"] = f.s.label(y);
                           return j;
                         });
                   }
                 }
                 t3_is_discrete(f, t);
               },
               {}, {}});

  r.push_back({"T4.9", "the intersection of two regular open sets is regular open",
               [](Facts& f, Tally& t) {
                 for (const auto& p : f.subsets) {
                   for (const auto& q : f.subsets) {
                     t.check(
                         is_regular_open(f.s, p) && is_regular_open(f.s, q),
                         [&] { return is_regular_open(f.s, p & q); },
                         [&] { return witness(f.s, {{"P", p}, {"Q", q}}); });
                   }
                 }
               },
               {}, {}});

  r.push_back({"T4.10", "any union of delta-open sets is delta-open",
               [](Facts& f, Tally& t) {
                 for_each_subfamily(f.delta_opens(), [&](const SetFamily& fam) {
                   t.check(
                       true, [&] { return is_delta_open(f.s, fam.union_all()); },
                       [&] {
                         Json j = witness(f.s, {});
                         j["family"] = family_to_json(f.s, fam);
                         return j;
                       });
                 });
               },
               {}, {}});

  r.push_back({"T4.11", "a finite intersection of delta-open sets is delta-open",
               [](Facts& f, Tally& t) {
                 for_each_subfamily(f.delta_opens(), [&](const SetFamily& fam) {
                   t.check(
                       true, [&] { return is_delta_open(f.s, fam.intersection_all()); },
                       [&] {
                         Json j = witness(f.s, {});
                         j["family"] = family_to_json(f.s, fam);
                         return j;
                       });
                 });
               },
               {}, {}});

  r.push_back(
      {"T4.12",
       "in a T3 space, a point x outside a delta-compact B and strongly separated from each point of B is separated from "
       "B by disjoint delta-open sets",
       [](Facts& f, Tally& t) {
         for (const auto& b : f.subsets) {
           for (std::size_t x = 0; x < f.s.size(); ++x) {
             if (b.contains(x)) continue;
             bool hyp = f.profile().t3 && f.compact(b);
             for (auto y : b.members()) hyp = hyp && strongly_separated(f.s, x, y);
             t.check(
                 hyp,
                 [&] {
                   const auto sep = delta_separate(f.s, x, b);
                   if (!sep) return false;
                   const auto& [u, v] = *sep;
                   return b.is_subset_of(u) && v.contains(x) && !u.intersects(v) && is_delta_open(f.s, u) &&
                          is_delta_open(f.s, v);
                 },
                 [&] { return point_witness(f.s, x, {{"B", b}}); });
           }
         }
         t3_is_discrete(f, t);
       },
       {}, {}});

  r.push_back({"T4.13", "in a delta-compact T3 space disjoint closed sets lie in disjoint delta-open sets",
               [](Facts& f, Tally& t) {
                 const bool space_hyp = f.space_compact() && f.profile().t3;
                 for (const auto& a : f.subsets) {
                   for (const auto& b : f.subsets) {
                     t.check(
                         space_hyp && f.s.is_closed(a) && f.s.is_closed(b) && !a.intersects(b),
                         [&] {
                           for (const auto& u : f.delta_opens()) {
                             if (!a.is_subset_of(u)) continue;
                             for (const auto& v : f.delta_opens()) {
                               if (b.is_subset_of(v) && !u.intersects(v)) return true;
                             }
                           }
                           return false;
                         },
                         [&] { return witness(f.s, {{"A", a}, {"B", b}}); });
                   }
                 }
                 t3_is_discrete(f, t);
               },
               {}, {}});

  r.push_back({"C4.14", "a delta-compact T3 space is T4",
               [](Facts& f, Tally& t) {
                 t.check(
                     f.space_compact() && f.profile().t3, [&] { return f.profile().t4; },
                     [&] { return witness(f.s, {}); });
                 t3_is_discrete(f, t);
               },
               {}, {}});

  r.push_back({"T4.15", "in a T3 space a delta-compact set is delta-closed; in a delta-compact T3 space the converse holds",
               [](Facts& f, Tally& t) {
                 for (const auto& y : f.subsets) {
                   t.check(
                       f.profile().t3 && f.compact(y), [&] { return is_delta_closed(f.s, y); },
                       [&] { return witness(f.s, {{"Y", y}}); });
                   t.check(
                       f.profile().t3 && f.space_compact() && is_delta_closed(f.s, y), [&] { return f.compact(y); },
                       [&] { return witness(f.s, {{"Y", y}}); });
                 }
                 t3_is_discrete(f, t);
               },
               {}, {}});

  r.push_back({"T4.17u", "the union of two delta-compact sets is delta-compact",
               [](Facts& f, Tally& t) {
                 for (const auto& a : f.subsets) {
                   for (const auto& b : f.subsets) {
                     t.check(
                         f.compact(a) && f.compact(b), [&] { return f.compact(a | b); },
                         [&] { return witness(f.s, {{"A", a}, {"B", b}}); });
                   }
                 }
               },
               {}, {}});

  r.push_back({"T4.18i", "any intersection of delta-closed sets is delta-closed",
               [](Facts& f, Tally& t) {
                 for_each_subfamily(f.delta_closeds(), [&](const SetFamily& fam) {
                   t.check(
                       true, [&] { return is_delta_closed(f.s, fam.intersection_all()); },
                       [&] {
                         Json j = witness(f.s, {});
                         j["family"] = family_to_json(f.s, fam);
                         return j;
                       });
                 });
               },
               {}, {}});

  r.push_back({"T4.19c", "in a T3 space the intersection of two delta-compact sets is delta-compact",
               [](Facts& f, Tally& t) {
                 for (const auto& a : f.subsets) {
                   for (const auto& b : f.subsets) {
                     t.check(
                         f.profile().t3 && f.compact(a) && f.compact(b), [&] { return f.compact(a & b); },
                         [&] { return witness(f.s, {{"A", a}, {"B", b}}); });
                   }
                 }
                 t3_is_discrete(f, t);
               },
               {}, {}});

  r.push_back({"T4.20ab", "in a delta-compact T3 space, A closed and B delta-compact imply A^B delta-compact",
               [](Facts& f, Tally& t) {
                 const bool space_hyp = f.space_compact() && f.profile().t3;
                 for (const auto& a : f.subsets) {
                   for (const auto& b : f.subsets) {
                     t.check(
                         space_hyp && f.s.is_closed(a) && f.compact(b), [&] { return f.compact(a & b); },
                         [&] { return witness(f.s, {{"A", a}, {"B", b}}); });
                   }
                 }
                 t3_is_discrete(f, t);
               },
               {}, {}});

  r.push_back({"E5.1", "x -> x^2 pulls the regular open (0,1) back to (-1,0)U(0,1), which is not regular open", {}, {},
               square_map_fixture});

  r.push_back({"T5.3", "an open continuous map pulls regular open sets back to regular open sets", {},
               [](const SpaceMap& m, const MapCtx&, Tally& t) {
                 const MapCheck c = preimage_regular_open_ok(m);
                 t.check(
                     is_open_continuous(classify_map(m)), [&] { return c.verdict == Verdict::pass; },
                     [&] { return map_witness(m, c.witness); });
               },
               square_map_not_applicable});

  r.push_back({"T5.4", "an open continuous map pulls delta-open sets back to delta-open sets", {},
               [](const SpaceMap& m, const MapCtx&, Tally& t) {
                 const MapCheck c = preimage_delta_open_ok(m);
                 t.check(
                     is_open_continuous(classify_map(m)), [&] { return c.verdict == Verdict::pass; },
                     [&] { return map_witness(m, c.witness); });
               },
               {}});

  r.push_back({"T5.5", "an open continuous image of a delta-compact space is delta-compact", {},
               [](const SpaceMap& m, const MapCtx& ctx, Tally& t) {
                 const MapCheck c = image_delta_compact_ok(m);
                 t.check(
                     is_open_continuous(classify_map(m)) && ctx.dom.compact, [&] { return c.verdict == Verdict::pass; },
                     [&] { return map_witness(m, c.witness); });
               },
               {}});

  r.push_back({"T5.7", "an open continuous map from a delta-compact space into a T3 space is delta-closed", {},
               [](const SpaceMap& m, const MapCtx& ctx, Tally& t) {
                 t.check(
                     is_open_continuous(classify_map(m)) && ctx.dom.compact && ctx.cod.profile.t3,
                     [&] { return is_delta_closed_map(m).verdict == Verdict::pass; },
                     [&] { return map_witness(m, is_delta_closed_map(m).witness); });
               },
               {}});

  r.push_back({"T5.8", "an open continuous map from a delta-compact T3 space into a T3 space is closed", {},
               [](const SpaceMap& m, const MapCtx& ctx, Tally& t) {
                 t.check(
                     is_open_continuous(classify_map(m)) && ctx.dom.compact && ctx.dom.profile.t3 &&
                         ctx.cod.profile.t3,
                     [&] { return classify_map(m).closed; }, [&] { return map_witness(m, std::nullopt); });
               },
               {}});

  r.push_back({"E6.2", "a delta-compact space is locally delta-compact",
               [](Facts& f, Tally& t) {
                 for (std::size_t x = 0; x < f.s.size(); ++x) {
                   t.check(
                       f.space_compact(), [&] { return is_locally_delta_compact(f.s, x).has_value(); },
                       [&] { return point_witness(f.s, x, {}); });
                 }
               },
               {}, {}});

  r.push_back({"E6.3", "in a discrete space each singleton is a delta-compact neighbourhood of its point",
               [](Facts& f, Tally& t) {
                 const bool hyp = is_discrete(f.s);
                 for (std::size_t x = 0; x < f.s.size(); ++x) {
                   const PtSet single = PtSet::singleton(f.s.size(), x);
                   t.check(
                       hyp,
                       [&] {
                         const auto nb = is_locally_delta_compact(f.s, x);
                         return f.compact(single) && nb.has_value() && *nb == single;
                       },
                       [&] { return point_witness(f.s, x, {}); });
                 }
               },
               {}, {}});

  r.push_back({"T6.4", "a closed subspace of a locally delta-compact T3 space is locally delta-compact",
               [](Facts& f, Tally& t) {
                 bool local = true;
                 for (std::size_t x = 0; x < f.s.size() && local; ++x) {
                   local = is_locally_delta_compact(f.s, x).has_value();
                 }
                 for (const auto& y : f.subsets) {
                   t.check(
                       f.profile().t3 && local && f.s.is_closed(y) && !y.empty(),
                       [&] {
                         const FinSpace sub = subspace(f.s, y);
                         for (std::size_t p = 0; p < sub.size(); ++p) {
                           if (!is_locally_delta_compact(sub, p)) return false;
                         }
                         return true;
                       },
                       [&] { return witness(f.s, {{"Y", y}}); });
                 }
                 t3_is_discrete(f, t);
               },
               {}, {}});

  return r;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> r = build_registry();
  return r;
}

const Check& find_check(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw UnknownId("unknown theorem id '" + id + "'");
}

struct Stream {
  std::vector<FinSpace> spaces;
  std::vector<std::shared_ptr<const FinSpace>> map_spaces;
  std::vector<MapSide> map_sides;
};

void check_spec(const StreamSpec& spec) {
  if (spec.spaces.empty()) {
    if (spec.min_points < 1 || spec.min_points > spec.max_points) {
      throw OutOfRange("stream needs 1 <= min-points <= max-points");
    }
    if (spec.max_points > kMaxSweepPoints) {
      throw OutOfRange("oversize stream: sweeps are limited to " + std::to_string(kMaxSweepPoints) + " points");
    }
    if (spec.map_max_points > kMaxMapSweepPoints) {
      throw OutOfRange("oversize stream: map sweeps are limited to " + std::to_string(kMaxMapSweepPoints) +
                       " points");
    }
  }
  for (const auto& s : spec.spaces) {
    if (s.size() > kMaxSweepPoints) {
      throw OutOfRange("oversize stream: a " + std::to_string(s.size()) + "-point space exceeds the sweep limit");
    }
  }
}

Stream build_stream(const StreamSpec& spec) {
  check_spec(spec);
  Stream st;
  if (!spec.spaces.empty()) {
    st.spaces = spec.spaces;
    for (const auto& s : spec.spaces) {
      if (s.size() <= kMaxMapSweepPoints) st.map_spaces.push_back(std::make_shared<const FinSpace>(s));
    }
  } else {
    for (std::size_t n = spec.min_points; n <= spec.max_points; ++n) {
      auto batch = enumerate_spaces(n, spec.up_to_homeo, spec.jobs);
      for (auto& s : batch) {
        if (n <= spec.map_max_points) st.map_spaces.push_back(std::make_shared<const FinSpace>(s));
        st.spaces.push_back(std::move(s));
      }
    }
  }
  for (const auto& s : st.map_spaces) st.map_sides.push_back({separation_profile(*s), is_delta_compact(*s, s->all())});
  return st;
}

// Runs work(i) for i < count on up to `jobs` threads and merges tallies in index order.
Tally run_indexed(std::size_t count, std::size_t jobs, const std::function<void(std::size_t, Tally&)>& work) {
  std::vector<Tally> parts(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i, parts[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < std::min(jobs, count); ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            work(i, parts[i]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
  }
  Tally out;
  for (auto& p : parts) out.absorb(std::move(p));
  return out;
}

TheoremReport run_check(const Check& c, const Stream& st, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  if (c.on_space) {
    total.absorb(run_indexed(st.spaces.size(), jobs, [&](std::size_t i, Tally& t) {
      Facts f(st.spaces[i]);
      c.on_space(f, t);
    }));
  }
  if (c.on_map) {
    const std::size_t k = st.map_spaces.size();
    total.absorb(run_indexed(k * k, jobs, [&](std::size_t i, Tally& t) {
      const std::size_t d = i / k;
      const std::size_t e = i % k;
      const MapCtx ctx{st.map_sides[d], st.map_sides[e]};
      for (const auto& m : enumerate_maps(st.map_spaces[d], st.map_spaces[e])) c.on_map(m, ctx, t);
    }));
  }
  if (c.fixtures) c.fixtures(total);

  TheoremReport r;
  r.id = c.id;
  r.statement = c.statement;
  r.instances_total = total.total;
  r.instances_hypothesis_true = total.hypothesis_true;
  r.counterexample_count = total.failures;
  r.counterexamples = std::move(total.kept);
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace

std::string to_string(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::pass:
      return "PASS";
    case TheoremVerdict::fail:
      return "FAIL";
    case TheoremVerdict::vacuous:
      return "VACUOUS";
  }
  return "?";
}

TheoremVerdict TheoremReport::verdict() const noexcept {
  if (counterexample_count > 0) return TheoremVerdict::fail;
  if (instances_hypothesis_true == 0) return TheoremVerdict::vacuous;
  return TheoremVerdict::pass;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

const std::string& theorem_statement(const std::string& id) { return find_check(id).statement; }

std::vector<TheoremReport> run_theorems(const std::vector<std::string>& ids, const StreamSpec& spec) {
  std::vector<const Check*> checks;
  for (const auto& id : ids) checks.push_back(&find_check(id));
  const Stream st = build_stream(spec);
  std::vector<TheoremReport> out;
  for (const auto* c : checks) out.push_back(run_check(*c, st, spec.jobs));
  return out;
}

TheoremReport run_theorem(const std::string& id, const StreamSpec& spec) { return run_theorems({id}, spec).front(); }

std::vector<TheoremReport> run_all(const StreamSpec& spec) { return run_theorems(theorem_ids(), spec); }

bool any_failed(const std::vector<TheoremReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const TheoremReport& r) { return r.verdict() == TheoremVerdict::fail; });
}

Json report_to_json(const TheoremReport& r, bool with_timing) {
  Json j;
  j["id"] = r.id;
  j["statement"] = r.statement;
  j["verdict"] = to_string(r.verdict());
  j["instances_total"] = r.instances_total;
  j["instances_hypothesis_true"] = r.instances_hypothesis_true;
  j["counterexample_count"] = r.counterexample_count;
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back(Json::parse(c));
  j["counterexamples"] = cex;
  if (with_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

TheoremReport report_from_json(const Json& j) {
  try {
    TheoremReport r;
    r.id = j.at("id").get<std::string>();
    r.statement = j.value("statement", std::string());
    r.instances_total = j.at("instances_total").get<std::uint64_t>();
    r.instances_hypothesis_true = j.at("instances_hypothesis_true").get<std::uint64_t>();
    r.counterexample_count = j.at("counterexample_count").get<std::uint64_t>();
    for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(c.dump());
    if (j.contains("elapsed_ms")) {
      r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::duration<double, std::milli>(j["elapsed_ms"].get<double>()));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("bad theorem report: ") + e.what());
  }
}

}  // namespace deltatop
