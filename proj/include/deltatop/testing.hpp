#pragma once

// Test-only fault injection. Production code never enables a mutation; the
// acceptance and unit suites use it to show that the theorem checks can fail.

namespace deltatop::testing {

enum class Mutation {
  none,
  /// is_regular_open(A) tests A == cl(A) instead of A == int(cl(A)).
  regular_open_drops_interior,
};

Mutation active_mutation() noexcept;

class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m);
  ~ScopedMutation();
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation previous_;
};

}  // namespace deltatop::testing
