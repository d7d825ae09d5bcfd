#include <doctest.h>

#include <map>
#include <set>

#include "deltatop/enumerate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace deltatop;

namespace {

FinSpace relabel(const FinSpace& s, const std::vector<std::size_t>& perm) {
  SetFamily opens(s.size());
  for (const auto& u : s.opens()) {
    PtSet m(s.size());
    for (auto x : u.members()) m = m.with(perm[x]);
    opens.insert(m);
  }
  return FinSpace::from_opens(opens);
}

}  // namespace

TEST_CASE("labeled counts match the family-filter oracle") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(count_spaces(n, false) == oracle::count_topologies(n));
  CHECK(count_spaces(1, false) == 1);
  CHECK(count_spaces(2, false) == 4);
  CHECK(count_spaces(3, false) == 29);
  CHECK(count_spaces(4, false) == 355);
  CHECK(count_spaces(5, false) == 6942);
}

TEST_CASE("homeomorphism class counts") {
  CHECK(count_spaces(2, true) == 3);
  CHECK(count_spaces(3, true) == 9);
  CHECK(count_spaces(4, true) == 33);
  CHECK(count_spaces(5, true) == 139);
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(count_spaces(0, false), OutOfRange);
  CHECK_THROWS_AS(count_spaces(8, false), OutOfRange);
}

TEST_CASE("parallel enumeration yields the same stream") {
  std::vector<std::vector<std::uint64_t>> one;
  std::vector<std::vector<std::uint64_t>> many;
  for_each_preorder(5, [&](const Preorder& p) { one.push_back(p.rows); });
  for_each_preorder(5, [&](const Preorder& p) { many.push_back(p.rows); }, 4);
  CHECK(one == many);
  CHECK(std::is_sorted(one.begin(), one.end()));
}

TEST_CASE("every emitted space is a topology and distinct") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& s : enumerate_spaces(n, false)) {
      REQUIRE(family_is_topology(s.opens(), n));
      std::vector<std::uint64_t> bits;
      for (const auto& u : s.opens()) bits.push_back(u.bits());
      std::sort(bits.begin(), bits.end());
      REQUIRE(seen.insert(bits).second);
      const Preorder p = specialization_preorder(s);
      REQUIRE(p.valid());
      REQUIRE(to_space(p).opens() == s.opens());
    }
  }
}

TEST_CASE("canonical form examples") {
  const FinSpace s = fx::sierp();
  CHECK(canonical_form(s) == canonical_form(relabel(s, {1, 0})));
  CHECK_FALSE(canonical_form(s) == canonical_form(fx::indisc2()));
  CHECK_FALSE(canonical_form(fx::disc3()) == canonical_form(fx::part3()));
}

TEST_CASE("canonical keys decide homeomorphism on n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto spaces = enumerate_spaces(n, false);
    std::vector<CanonicalKey> keys;
    std::vector<oracle::Topo> topos;
    for (const auto& s : spaces) {
      keys.push_back(canonical_form(s));
      topos.push_back(oracle::from(s));
    }
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      for (std::size_t j = i; j < spaces.size(); ++j) {
        REQUIRE((keys[i] == keys[j]) == oracle::homeomorphic(topos[i], topos[j]));
      }
    }
  }
}

TEST_CASE("orbit sums recover the labeled counts") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::uint64_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    std::uint64_t total = 0;
    std::set<CanonicalKey> keys;
    for (const auto& s : enumerate_spaces(n, true)) {
      REQUIRE(keys.insert(canonical_form(s)).second);
      total += factorial / automorphism_count(s);
    }
    CHECK(total == count_spaces(n, false));
  }
}

TEST_CASE("representatives are the first labeled space of each class") {
  const auto labeled = enumerate_spaces(3, false);
  const auto reps = enumerate_spaces(3, true);
  std::set<CanonicalKey> seen;
  std::vector<std::size_t> first_index;
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    if (seen.insert(canonical_form(labeled[i])).second) first_index.push_back(i);
  }
  REQUIRE(first_index.size() == reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) CHECK(reps[k].opens() == labeled[first_index[k]].opens());
}
