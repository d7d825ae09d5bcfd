#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "deltatop/finite_space.hpp"
#include "deltatop/json_io.hpp"
#include "deltatop/real_line.hpp"

namespace deltatop {

// Small operator language shared by the `interval` and `search` commands.
//
//   set terms   int(S) cl(S) comp(S) dcl(S) sqinv(S)  S U S  S ^ S  S - S  (S)
//               interval literals (0,1] ... {} R      label sets {a,b}
//               X is the whole space (the real line in real mode)
//               variables: single capital letters other than U, R and X
//   predicates  open closed regular_open regular_closed delta_open delta_closed
//   formulas    P(S)  S = S  S subset S  not F  F and F  F or F  F implies F  (F)
//
// `^` binds tighter than `U` and `-`; `implies` is right associative and binds loosest.

struct ExprNode;

class Expr {
 public:
  bool is_formula() const;
  /// Variable names in first-appearance order.
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::string& text() const noexcept { return text_; }
  const ExprNode& root() const noexcept { return *root_; }

 private:
  friend Expr parse_expr(std::string_view text);
  std::shared_ptr<const ExprNode> root_;
  std::vector<std::string> vars_;
  std::string text_;
};

/// Throws ParseError (with the offending position) on syntax or type errors.
Expr parse_expr(std::string_view text);

using RealValue = std::variant<IntervalSet, bool>;
using FiniteValue = std::variant<PtSet, bool>;

/// Evaluates over the real line. Throws ParseError for constructs that only make
/// sense on a finite space (label sets, X, dcl).
RealValue evaluate_real(const Expr& e, const std::map<std::string, IntervalSet>& vars = {});
/// Evaluates inside a finite space. Throws ParseError for real-line constructs.
FiniteValue evaluate_finite(const Expr& e, const FinSpace& s, const std::map<std::string, PtSet>& vars = {});

std::string format_value(const RealValue& v);

/// A random interval set with up to `max_parts` components and endpoints drawn
/// from the multiples of 1/4 in [-4, 4].
IntervalSet random_interval_set(std::mt19937_64& rng, std::size_t max_parts = 3);

struct SearchResult {
  std::uint64_t instances = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Json> examples;
};

/// Evaluates a formula for every assignment of subsets to its variables in every
/// given space, collecting the assignments where it is false.
SearchResult search_counterexamples(const Expr& e, const std::vector<FinSpace>& spaces, std::size_t keep = 1);

}  // namespace deltatop
