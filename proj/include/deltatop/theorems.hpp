#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "deltatop/finite_space.hpp"
#include "deltatop/json_io.hpp"

namespace deltatop {

/// Largest carrier swept by the theorem suite.
inline constexpr std::size_t kMaxSweepPoints = 4;
/// Largest carrier used on either side of a map sweep.
inline constexpr std::size_t kMaxMapSweepPoints = 3;

/// Which instances a theorem is run over. Spaces on min_points..max_points points
/// are enumerated unless `spaces` is nonempty, in which case exactly those are
/// used (for maps as well, paired with each other).
struct StreamSpec {
  std::size_t min_points = 1;
  std::size_t max_points = 3;
  std::size_t map_max_points = kMaxMapSweepPoints;
  bool up_to_homeo = false;
  std::vector<FinSpace> spaces;
  std::size_t jobs = 1;
};

enum class TheoremVerdict { pass, fail, vacuous };

std::string to_string(TheoremVerdict v);

struct TheoremReport {
  std::string id;
  std::string statement;
  std::uint64_t instances_total = 0;
  std::uint64_t instances_hypothesis_true = 0;
  std::uint64_t counterexample_count = 0;
  /// The first few counterexamples in stream order, each a JSON document.
  std::vector<std::string> counterexamples;
  std::chrono::nanoseconds elapsed{0};

  TheoremVerdict verdict() const noexcept;
};

/// Counterexamples kept per report; the count is always exact.
inline constexpr std::size_t kKeptCounterexamples = 8;

const std::vector<std::string>& theorem_ids();
const std::string& theorem_statement(const std::string& id);

/// Throws UnknownId for an unregistered id and OutOfRange for an oversize stream.
TheoremReport run_theorem(const std::string& id, const StreamSpec& spec);
/// Runs the given ids over one shared stream, in the order given.
std::vector<TheoremReport> run_theorems(const std::vector<std::string>& ids, const StreamSpec& spec);
std::vector<TheoremReport> run_all(const StreamSpec& spec);

bool any_failed(const std::vector<TheoremReport>& reports);

/// `with_timing` adds elapsed_ms; left out by default so output is reproducible.
Json report_to_json(const TheoremReport& r, bool with_timing = false);
TheoremReport report_from_json(const Json& j);

}  // namespace deltatop
