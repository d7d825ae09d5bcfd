#include <doctest.h>

#include <random>

#include "deltatop/expr.hpp"
#include "deltatop/real_line.hpp"
#include "oracles.hpp"

using namespace deltatop;

namespace {

IntervalSet iv(std::string_view text) { return parse_interval_set(text); }

oracle::Samples sample(const IntervalSet& a) {
  oracle::Samples s;
  for (int k = oracle::Samples::kLo; k <= oracle::Samples::kHi; ++k) s.set(k, a.contains(Rat(k, 8)));
  return s;
}

std::vector<IntervalSet> corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<IntervalSet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_interval_set(rng, 4));
  return out;
}

}  // namespace

TEST_CASE("normalize merges touching pieces and rejects bad intervals") {
  CHECK(IntervalSet::normalize({Interval::open(0, 1), Interval::open(1, 2), Interval::point(1)}) == iv("(0,2)"));
  CHECK(IntervalSet::normalize({}).empty());
  CHECK(IntervalSet::normalize({Interval::open(-1, 0), Interval::open(0, 1)}).components().size() == 2);
  CHECK_THROWS_AS(IntervalSet::normalize({Interval::open(2, 1)}), MalformedInput);
  CHECK_THROWS_AS(IntervalSet::normalize({Interval{Endpoint::open_at(1), Endpoint::closed_at(1)}}), MalformedInput);
  CHECK(IntervalSet::normalize({Interval::closed(0, 1), Interval::open(1, 2)}) == iv("[0,2)"));
}

TEST_CASE("closure and interior examples") {
  CHECK(closure_r(iv("(-1,0)U(0,1)")) == iv("[-1,1]"));
  CHECK(closure_r(IntervalSet()).empty());
  CHECK(closure_r(iv("(1,2)")) == iv("[1,2]"));
  CHECK(interior_r(iv("[-1,1]")) == iv("(-1,1)"));
  CHECK(interior_r(iv("[1,1]")).empty());
  CHECK(interior_r(iv("[1,3/2]")) == iv("(1,3/2)"));
  CHECK(closure_r(iv("(-inf,0)")) == iv("(-inf,0]"));
  CHECK(IntervalSet::real_line().complement().empty());
}

TEST_CASE("regular open examples") {
  CHECK_FALSE(is_regular_open_r(iv("(-1,0)U(0,1)")));
  CHECK(is_regular_open_r(IntervalSet()));
  CHECK(is_regular_open_r(iv("(0,1)")));
  CHECK(is_regular_open_r(IntervalSet::real_line()));
}

TEST_CASE("relative operators on the half-open subspace") {
  const IntervalSet v = iv("(1,2)");
  const IntervalSet y = iv("[1,3/2]");
  CHECK((v & y) == iv("(1,3/2]"));
  CHECK(relative_closure(v & y, y) == iv("[1,3/2]"));
  CHECK(relative_int_cl(v, y) == iv("[1,3/2]"));
  CHECK_FALSE(is_regular_open_in(v & y, y));
  CHECK(relative_int_cl(iv("(0,1)"), iv("(0,1)")) == iv("(0,1)"));
  CHECK(relative_int_cl(v, iv("(0,3)")) == iv("(1,2)"));
  CHECK(is_regular_open_in(v, iv("(0,3)")));
}

TEST_CASE("preimage under squaring") {
  CHECK(preimage_square(iv("(0,1)")) == iv("(-1,0)U(0,1)"));
  CHECK(preimage_square(IntervalSet()).empty());
  CHECK(preimage_square(iv("(1,4)")) == iv("(-2,-1)U(1,2)"));
  CHECK(preimage_square(iv("[0,1]")) == iv("[-1,1]"));
  CHECK(preimage_square(iv("(-inf,-1)")).empty());
  CHECK(preimage_square(iv("[1/4,9/4]")) == iv("[-3/2,-1/2]U[1/2,3/2]"));
  CHECK_THROWS_AS(preimage_square(iv("(0,2)")), UnsupportedEndpoint);
}

TEST_CASE("text format round trips") {
  for (const char* text : {"(-1,0)U(0,1)", "[1,3/2]", "(-inf,0]", "{}", "(-inf,+inf)", "[2,2]U(3,10/3)"}) {
    const IntervalSet a = iv(text);
    CHECK(iv(format_interval_set(a)) == a);
  }
  CHECK(format_interval_set(iv("(-1,0)U(0,1)")) == "(-1,0)U(0,1)");
  CHECK(format_interval_set(iv("[1,1.5]")) == "[1,3/2]");
  CHECK(format_interval_set(IntervalSet()) == "{}");
  for (const auto& a : corpus(200, 7)) CHECK(iv(format_interval_set(a)) == a);
  CHECK_THROWS_AS(iv("(1,2"), ParseError);
  CHECK_THROWS_AS(iv("(2,1)"), ParseError);
  CHECK_THROWS_AS(iv("(1,2)U"), ParseError);
  try {
    iv("(0,1)U(1,x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("set operations agree with sampled membership") {
  const auto sets = corpus(300, 11);
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    const IntervalSet& a = sets[i];
    const IntervalSet& b = sets[i + 1];
    const auto sa = sample(a);
    const auto sb = sample(b);
    REQUIRE(sample(a.complement()) == oracle::complement(sa));
    REQUIRE(sample(closure_r(a)) == oracle::closure(sa));
    REQUIRE(sample(interior_r(a)) == oracle::interior(sa));
    oracle::Samples uni;
    oracle::Samples meet;
    for (int k = oracle::Samples::kLo; k <= oracle::Samples::kHi; ++k) {
      uni.set(k, sa.at(k) || sb.at(k));
      meet.set(k, sa.at(k) && sb.at(k));
    }
    REQUIRE(sample(a | b) == uni);
    REQUIRE(sample(a & b) == meet);
    REQUIRE(a.complement().complement() == a);
    REQUIRE((a - b) == (a & b.complement()));
    REQUIRE(is_regular_open_r(a) == (sample(a) == oracle::interior(oracle::closure(sa))));
  }
}

TEST_CASE("duality, idempotence and monotonicity on a random corpus") {
  const auto sets = corpus(400, 3);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const IntervalSet& a = sets[i];
    REQUIRE(is_regular_open_r(a) == is_regular_closed_r(a.complement()));
    const IntervalSet ic = interior_r(closure_r(a));
    REQUIRE(interior_r(closure_r(ic)) == ic);
    if (is_open_r(a)) REQUIRE(is_delta_open_r(a));
    REQUIRE(is_delta_open_r(a) == is_delta_closed_r(a.complement()));
    const IntervalSet b = a | sets[(i + 1) % sets.size()];
    REQUIRE(closure_r(a).is_subset_of(closure_r(b)));
    REQUIRE(interior_r(a).is_subset_of(interior_r(b)));
  }
}
