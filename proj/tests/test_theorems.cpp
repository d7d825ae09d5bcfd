#include <doctest.h>

#include "deltatop/testing.hpp"
#include "deltatop/theorems.hpp"
#include "fixtures.hpp"

using namespace deltatop;

namespace {

StreamSpec only(std::vector<FinSpace> spaces) {
  StreamSpec spec;
  spec.spaces = std::move(spaces);
  return spec;
}

StreamSpec sweep(std::size_t lo, std::size_t hi) {
  StreamSpec spec;
  spec.min_points = lo;
  spec.max_points = hi;
  return spec;
}

}  // namespace

TEST_CASE("registry lists every id once") {
  const auto& ids = theorem_ids();
  CHECK(ids.size() == 33);
  CHECK(ids.front() == "T2.3");
  CHECK(ids.back() == "T6.4");
  std::set<std::string> uniq(ids.begin(), ids.end());
  CHECK(uniq.size() == ids.size());
  for (const auto& id : ids) CHECK_FALSE(theorem_statement(id).empty());
}

TEST_CASE("duality over the 3-point topologies") {
  const TheoremReport r = run_theorem("T2.3", sweep(3, 3));
  CHECK(r.verdict() == TheoremVerdict::pass);
  CHECK(r.instances_total == 232);
  CHECK(r.instances_hypothesis_true == 232);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("a single space stream") {
  const TheoremReport r = run_theorem("T3.7", only({fx::sierp()}));
  CHECK(r.verdict() == TheoremVerdict::pass);
  CHECK(r.instances_total == 4);
  for (const auto& rep : run_all(only({fx::sierp()}))) {
    CHECK(rep.verdict() != TheoremVerdict::fail);
  }
}

TEST_CASE("real-line fixtures") {
  const TheoremReport e = run_theorem("E5.1", only({fx::sierp()}));
  CHECK(e.verdict() == TheoremVerdict::pass);
  CHECK(e.instances_hypothesis_true == 1);
  // The subspace fixtures ride along with the finite sweep.
  const TheoremReport t = run_theorem("T3.4", only({fx::sierp()}));
  CHECK(t.verdict() == TheoremVerdict::pass);
  CHECK(t.instances_total == 16 + 6);
}

TEST_CASE("T3-hypothesis statements hold only vacuously off the discrete spaces") {
  std::vector<FinSpace> nondiscrete = {fx::sierp(), fx::part3(), fx::indisc2()};
  for (const char* id : {"T4.13", "C4.14", "T4.15", "T4.19c", "T4.20ab", "T4.12", "T6.4"}) {
    CHECK(run_theorem(id, only(nondiscrete)).verdict() == TheoremVerdict::vacuous);
    CHECK(run_theorem(id, only({fx::disc3()})).verdict() == TheoremVerdict::pass);
  }
}

TEST_CASE("full sweep to three points passes") {
  const auto reports = run_all(sweep(1, 3));
  CHECK_FALSE(any_failed(reports));
  for (const auto& r : reports) CHECK(r.counterexample_count == 0);
}

TEST_CASE("counts do not depend on the worker count") {
  StreamSpec one = sweep(1, 3);
  StreamSpec four = sweep(1, 3);
  four.jobs = 4;
  const auto a = run_theorems({"T3.4", "T4.17u", "T5.3", "T5.7"}, one);
  const auto b = run_theorems({"T3.4", "T4.17u", "T5.3", "T5.7"}, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(report_to_json(a[i]) == report_to_json(b[i]));
  }
}

TEST_CASE("mutated regular openness is caught") {
  testing::ScopedMutation m(testing::Mutation::regular_open_drops_interior);
  const auto reports = run_theorems({"R2.4", "T3.2"}, sweep(1, 3));
  CHECK(reports[0].verdict() == TheoremVerdict::fail);
  CHECK(reports[1].verdict() == TheoremVerdict::fail);
  CHECK_FALSE(reports[0].counterexamples.empty());
  CHECK(reports[0].counterexamples.size() <= kKeptCounterexamples);
}

TEST_CASE("stream and id errors") {
  CHECK_THROWS_AS(run_theorem("T9.9", sweep(1, 2)), UnknownId);
  CHECK_THROWS_AS(run_theorem("T2.3", sweep(1, 5)), OutOfRange);
  CHECK_THROWS_AS(run_theorem("T2.3", sweep(3, 2)), OutOfRange);
  CHECK_THROWS_AS(run_theorem("T2.3", only({FinSpace::discrete(5)})), OutOfRange);
  StreamSpec maps = sweep(1, 2);
  maps.map_max_points = 4;
  CHECK_THROWS_AS(run_theorem("T5.3", maps), OutOfRange);
}

TEST_CASE("reports round-trip through json") {
  TheoremReport r;
  {
    testing::ScopedMutation m(testing::Mutation::regular_open_drops_interior);
    r = run_theorem("R2.4", sweep(3, 3));
  }
  const Json j = report_to_json(r, true);
  const TheoremReport back = report_from_json(j);
  CHECK(back.id == r.id);
  CHECK(back.instances_total == r.instances_total);
  CHECK(back.instances_hypothesis_true == r.instances_hypothesis_true);
  CHECK(back.counterexample_count == r.counterexample_count);
  CHECK(back.counterexamples == r.counterexamples);
  CHECK(report_to_json(back) == report_to_json(r));
  CHECK(j["verdict"] == "FAIL");
  // Each counterexample names a space that parses back.
  CHECK_NOTHROW(space_from_json(Json::parse(r.counterexamples.front())["space"]));
}
