#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "deltatop/errors.hpp"

namespace deltatop {

/// Exact rational; always reduced with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// One end of an interval. An absent value is -inf on the lower side and +inf
/// on the upper side; infinite ends are always open.
struct Endpoint {
  std::optional<Rat> value;
  bool closed = false;

  static Endpoint open_at(Rat v) { return {std::move(v), false}; }
  static Endpoint closed_at(Rat v) { return {std::move(v), true}; }
  static Endpoint infinite() { return {std::nullopt, false}; }

  bool finite() const noexcept { return value.has_value(); }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Interval {
  Endpoint lo;
  Endpoint hi;

  static Interval open(Rat a, Rat b) { return {Endpoint::open_at(std::move(a)), Endpoint::open_at(std::move(b))}; }
  static Interval closed(Rat a, Rat b) {
    return {Endpoint::closed_at(std::move(a)), Endpoint::closed_at(std::move(b))};
  }
  static Interval point(const Rat& a) { return closed(a, a); }

  bool degenerate() const { return lo.finite() && hi.finite() && *lo.value == *hi.value; }
  bool contains(const Rat& x) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of intervals of the real line in normal form: components are
/// sorted, nonempty, pairwise disjoint, and no two of them can be merged.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Throws MalformedInput for lo > hi or for lo == hi with an open side.
  static IntervalSet normalize(std::vector<Interval> raw);
  static IntervalSet of(Interval i) { return normalize({std::move(i)}); }
  static IntervalSet real_line();

  const std::vector<Interval>& components() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  bool contains(const Rat& x) const;

  /// Complement within the real line.
  IntervalSet complement() const;
  bool is_subset_of(const IntervalSet& o) const;

  friend IntervalSet operator|(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet operator&(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet operator-(const IntervalSet& a, const IntervalSet& b);
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet closure_r(const IntervalSet& a);
IntervalSet interior_r(const IntervalSet& a);
bool is_open_r(const IntervalSet& a);
bool is_closed_r(const IntervalSet& a);
bool is_regular_open_r(const IntervalSet& a);
bool is_regular_closed_r(const IntervalSet& a);
/// Open sets of the real line are delta-open; the check also confirms that each
/// component C satisfies int(cl(C)) inside the set.
bool is_delta_open_r(const IntervalSet& a);
bool is_delta_closed_r(const IntervalSet& a);

/// Closure and interior relative to the subspace y.
IntervalSet relative_closure(const IntervalSet& a, const IntervalSet& y);
IntervalSet relative_interior(const IntervalSet& a, const IntervalSet& y);
/// int_Y(cl_Y(v & y)).
IntervalSet relative_int_cl(const IntervalSet& v, const IntervalSet& y);
/// Whether v & y is regular open in the subspace y.
bool is_regular_open_in(const IntervalSet& v, const IntervalSet& y);

/// Preimage under x -> x^2. Finite endpoints of the nonnegative part must be
/// squares of rationals, otherwise UnsupportedEndpoint is thrown.
IntervalSet preimage_square(const IntervalSet& a);

std::string format_rat(const Rat& r);
std::string format_interval_set(const IntervalSet& a);

/// Accepts integers, p/q and finite decimals ("1.5").
Rat parse_rat(std::string_view text);
IntervalSet parse_interval_set(std::string_view text);

/// Parses one interval literal at `pos`; advances `pos` past it on success.
/// Returns nullopt (leaving `pos` untouched) if the text there is not an interval literal.
std::optional<Interval> try_parse_interval(std::string_view text, std::size_t& pos);

}  // namespace deltatop
