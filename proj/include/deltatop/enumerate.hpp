#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "deltatop/finite_space.hpp"
#include "deltatop/maps.hpp"

namespace deltatop {

inline constexpr std::size_t kMaxEnumeratedPoints = 7;

/// Reflexive transitive relation on n points. Row x holds the points y with x <= y,
/// which is the minimal open neighbourhood of x in the corresponding space.
struct Preorder {
  std::size_t n = 0;
  std::vector<std::uint64_t> rows;

  bool leq(std::size_t x, std::size_t y) const { return ((rows[x] >> y) & 1U) != 0; }
  bool valid() const;
  friend bool operator==(const Preorder&, const Preorder&) = default;
};

/// The space whose opens are the up-sets of `p`.
FinSpace to_space(const Preorder& p);
/// Specialization preorder: x <= y iff every open set containing x contains y.
Preorder specialization_preorder(const FinSpace& s);

/// Relabeling-invariant identifier of a homeomorphism class.
struct CanonicalKey {
  std::string bytes;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_form(const FinSpace& s);

/// Every preorder on n points, in lexicographic order of the row sequence
/// (rows compared as integers). Work is split by the first row across `jobs`
/// threads; the callback always runs on the calling thread, in order.
void for_each_preorder(std::size_t n, const std::function<void(const Preorder&)>& fn, std::size_t jobs = 1);

/// Every topology on n labeled points, or one representative per homeomorphism
/// class (the first one met in preorder order).
void for_each_space(std::size_t n, bool up_to_homeo, const std::function<void(const FinSpace&)>& fn,
                    std::size_t jobs = 1);
std::vector<FinSpace> enumerate_spaces(std::size_t n, bool up_to_homeo, std::size_t jobs = 1);
std::uint64_t count_spaces(std::size_t n, bool up_to_homeo, std::size_t jobs = 1);

/// Number of point permutations preserving the open sets; brute force over all n! permutations.
std::uint64_t automorphism_count(const FinSpace& s);

struct MapFilter {
  bool continuous = false;
  bool open = false;
  bool closed = false;
};

inline constexpr std::size_t kMaxMapCarrier = 4;

/// All total functions dom -> cod whose classification has every requested flag,
/// tables in lexicographic order (first point most significant).
std::vector<SpaceMap> enumerate_maps(const std::shared_ptr<const FinSpace>& dom,
                                     const std::shared_ptr<const FinSpace>& cod, MapFilter filter = {});

}  // namespace deltatop
