#include <doctest.h>

#include "deltatop/enumerate.hpp"
#include "deltatop/finite_space.hpp"
#include "deltatop/testing.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace deltatop;
using fx::set;

TEST_CASE("space construction validates input") {
  const FinSpace s = fx::sierp();
  CHECK(s.size() == 2);
  CHECK(s.min_nbhd(0) == set(s, "a"));
  CHECK(s.min_nbhd(1) == set(s, "ab"));
  CHECK(s.opens().size() == 3);
  SetFamily not_topology(2, {PtSet::empty(2), PtSet::singleton(2, 0), PtSet::singleton(2, 1)});
  CHECK_THROWS_AS(FinSpace::from_opens(not_topology), MalformedInput);
  CHECK_THROWS_AS(FinSpace::from_opens({"a", "a"}, SetFamily(2, {PtSet::empty(2), PtSet::full(2)})),
                  MalformedInput);
  CHECK_THROWS_AS(FinSpace::from_min_neighborhoods({PtSet::of(2, {1}), PtSet::full(2)}), MalformedInput);
  CHECK(FinSpace::from_min_neighborhoods({PtSet::of(2, {0}), PtSet::full(2)}).opens() == s.opens());
  CHECK(FinSpace::discrete(3).opens().size() == 8);
  CHECK(FinSpace::indiscrete(3).opens().size() == 2);
}

TEST_CASE("interior and closure examples") {
  const FinSpace s = fx::sierp();
  const FinSpace p = fx::part3();
  CHECK(interior(s, set(s, "b")) == s.none());
  CHECK(interior(p, set(p, "ab")) == set(p, "a"));
  CHECK(interior(p, p.all()) == p.all());
  CHECK(closure(s, set(s, "a")) == s.all());
  CHECK(closure(s, s.none()) == s.none());
  CHECK(closure(p, set(p, "b")) == set(p, "bc"));
  CHECK_THROWS_AS(interior(s, PtSet(3)), MalformedInput);
}

TEST_CASE("regular open and closed examples") {
  const FinSpace s = fx::sierp();
  const FinSpace p = fx::part3();
  CHECK_FALSE(is_regular_open(s, set(s, "a")));
  CHECK(is_regular_open(s, s.none()));
  CHECK(is_regular_open(s, s.all()));
  CHECK(is_regular_open(p, set(p, "bc")));
  CHECK_FALSE(is_regular_closed(s, set(s, "b")));
  CHECK(is_regular_closed(s, s.all()));
  CHECK(is_regular_closed(p, set(p, "a")));
  CHECK(regular_open_family(s) == SetFamily(2, {s.none(), s.all()}));
  CHECK(regular_open_family(fx::disc3()).size() == 8);
  CHECK(regular_open_family(p) == SetFamily(3, {p.none(), set(p, "a"), set(p, "bc"), p.all()}));
}

TEST_CASE("delta operators examples") {
  const FinSpace s = fx::sierp();
  const FinSpace p = fx::part3();
  CHECK_FALSE(is_delta_open(s, set(s, "a")));
  CHECK(is_delta_open(s, s.none()));
  CHECK(is_delta_open(p, set(p, "bc")));
  CHECK(delta_closure(s, set(s, "b")) == s.all());
  CHECK(delta_closure(s, s.none()) == s.none());
  CHECK(delta_closure(p, set(p, "b")) == set(p, "bc"));
  CHECK_FALSE(is_delta_closed(s, set(s, "b")));
  CHECK(is_delta_closed(s, s.all()));
  CHECK(is_delta_closed(p, set(p, "bc")));
  CHECK(delta_open_family(s) == SetFamily(2, {s.none(), s.all()}));
  CHECK(delta_open_family(fx::disc2()).size() == 4);
  CHECK(delta_open_family(p) == SetFamily(3, {p.none(), set(p, "a"), set(p, "bc"), p.all()}));
}

TEST_CASE("subspace examples") {
  const FinSpace p = fx::part3();
  const FinSpace sub = subspace(p, set(p, "ab"));
  CHECK(sub.labels() == std::vector<std::string>{"a", "b"});
  CHECK(sub.opens().size() == 4);
  const FinSpace s = fx::sierp();
  CHECK(subspace(s, s.all()).opens() == s.opens());
  const FinSpace one = subspace(s, set(s, "b"));
  CHECK(one.size() == 1);
  CHECK(one.label(0) == "b");
  CHECK(one.opens().size() == 2);
  CHECK_THROWS_AS(subspace(s, s.none()), DegenerateInput);
  const PtSet y = set(p, "ac");
  CHECK(lift_from(y, restrict_to(y, set(p, "c"))) == set(p, "c"));
  CHECK_THROWS_AS(restrict_to(y, set(p, "b")), MalformedInput);
}

TEST_CASE("separation profile examples") {
  const SeparationProfile part{false, false, false, true, false, true, false};
  CHECK(separation_profile(fx::part3()) == part);
  CHECK(separation_profile(fx::indisc2()) == part);
  const SeparationProfile all{true, true, true, true, true, true, true};
  CHECK(separation_profile(fx::disc3()) == all);
  const SeparationProfile sierp{true, false, false, false, false, true, false};
  CHECK(separation_profile(fx::sierp()) == sierp);
}

TEST_CASE("delta_separate examples") {
  const FinSpace p = fx::part3();
  const auto r = delta_separate(p, 0, set(p, "bc"));
  REQUIRE(r.has_value());
  CHECK(r->first == set(p, "bc"));
  CHECK(r->second == set(p, "a"));
  const FinSpace s = fx::sierp();
  CHECK_FALSE(delta_separate(s, 0, set(s, "b")).has_value());
  const FinSpace d = fx::disc2();
  const auto e = delta_separate(d, 0, d.none());
  REQUIRE(e.has_value());
  CHECK(e->first == d.none());
  CHECK(e->second == d.all());
  CHECK_THROWS_AS(delta_separate(p, 0, set(p, "ab")), PreconditionViolation);
}

// Every space on up to 4 points against the definition-level oracles.
TEST_CASE("operators agree with the definitional oracles on n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_spaces(n, false)) {
      const oracle::Topo t = oracle::from(s);
      REQUIRE(separation_profile(s) == oracle::profile(t));
      for (const auto& a : all_subsets(n)) {
        const auto m = a.bits();
        REQUIRE(interior(s, a).bits() == oracle::interior(t, m));
        REQUIRE(closure(s, a).bits() == oracle::closure(t, m));
        REQUIRE(is_regular_open(s, a) == oracle::regular_open(t, m));
        REQUIRE(is_regular_closed(s, a) == oracle::regular_closed(t, m));
        REQUIRE(is_delta_open(s, a) == oracle::delta_open(t, m));
        REQUIRE(delta_closure(s, a).bits() == oracle::delta_closure(t, m));
        REQUIRE(is_delta_closed(s, a) == oracle::delta_closed(t, m));
        REQUIRE(s.is_open(a) == (std::find(t.opens.begin(), t.opens.end(), m) != t.opens.end()));
      }
    }
  }
}

TEST_CASE("structural properties on n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_spaces(n, false)) {
      const auto profile = separation_profile(s);
      const SetFamily dopen = delta_open_family(s);
      for (const auto& u : dopen) REQUIRE(s.is_open(u));
      if (profile.regular) REQUIRE(dopen == s.opens());
      for (const auto& a : all_subsets(n)) {
        REQUIRE(a.is_subset_of(closure(s, a)));
        REQUIRE(closure(s, a).is_subset_of(delta_closure(s, a)));
        REQUIRE(interior(s, a).is_subset_of(a));
        if (s.is_open(a)) {
          const PtSet ic = interior(s, closure(s, a));
          REQUIRE(interior(s, closure(s, ic)) == ic);
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (const auto& b : all_subsets(n)) {
          if (b.contains(x)) continue;
          if (auto r = delta_separate(s, x, b)) {
            REQUIRE(b.is_subset_of(r->first));
            REQUIRE(r->second.contains(x));
            REQUIRE_FALSE(r->first.intersects(r->second));
            REQUIRE(is_delta_open(s, r->first));
            REQUIRE(is_delta_open(s, r->second));
          } else {
            // Absent only when some point of b has no disjoint delta-open pair with x.
            bool some_blocked = false;
            for (auto y : b.members()) {
              bool found = false;
              for (const auto& u : dopen) {
                for (const auto& v : dopen) {
                  found = found || (u.contains(y) && v.contains(x) && !u.intersects(v));
                }
              }
              some_blocked = some_blocked || !found;
            }
            REQUIRE(some_blocked);
          }
        }
      }
    }
  }
}

TEST_CASE("finite T2 spaces are discrete") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_spaces(n, false)) {
      if (separation_profile(s).t2) REQUIRE(is_discrete(s));
    }
  }
}

TEST_CASE("mutation seam changes regular openness only while active") {
  const FinSpace p = fx::space(3, {"", "a", "b", "ab", "abc"});
  const PtSet a = set(p, "a");
  CHECK(is_regular_open(p, a));
  {
    testing::ScopedMutation m(testing::Mutation::regular_open_drops_interior);
    CHECK_FALSE(is_regular_open(p, a));
  }
  CHECK(is_regular_open(p, a));
}
