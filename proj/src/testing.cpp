#include "deltatop/testing.hpp"

#include <atomic>

namespace deltatop::testing {

namespace {
std::atomic<Mutation> g_mutation{Mutation::none};
}

Mutation active_mutation() noexcept { return g_mutation.load(std::memory_order_relaxed); }

ScopedMutation::ScopedMutation(Mutation m) : previous_(g_mutation.exchange(m)) {}

ScopedMutation::~ScopedMutation() { g_mutation.store(previous_); }

}  // namespace deltatop::testing
