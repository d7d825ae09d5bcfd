#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "deltatop/finite_space.hpp"

namespace fx {

using deltatop::FinSpace;
using deltatop::PtSet;
using deltatop::SetFamily;

// Set over the given space from a string of single-letter labels, e.g. "ab".
inline PtSet set(const FinSpace& s, const std::string& labels) {
  PtSet out = s.none();
  for (char c : labels) out = out.with(*s.index_of(std::string(1, c)));
  return out;
}

inline FinSpace space(std::size_t n, std::initializer_list<const char*> opens) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  SetFamily fam(n);
  const FinSpace scratch = FinSpace::discrete(n);
  for (const char* o : opens) fam.insert(set(scratch, o));
  return FinSpace::from_opens(labels, fam);
}

inline FinSpace sierp() { return space(2, {"", "a", "ab"}); }
inline FinSpace part3() { return space(3, {"", "a", "bc", "abc"}); }
inline FinSpace disc2() { return FinSpace::discrete(2); }
inline FinSpace disc3() { return FinSpace::discrete(3); }
inline FinSpace indisc2() { return FinSpace::indiscrete(2); }

}  // namespace fx
