#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "deltatop/errors.hpp"

namespace deltatop {

inline constexpr std::size_t kMaxCarrier = 64;

struct Point {
  std::size_t id = 0;
  std::string label;
};

/// A subset of the carrier {0, ..., carrier_size-1}, stored as a 64-bit mask.
class PtSet {
 public:
  PtSet() = default;

  explicit PtSet(std::size_t carrier_size, std::uint64_t bits = 0)
      : n_(static_cast<std::uint8_t>(carrier_size)), bits_(bits) {
    if (carrier_size > kMaxCarrier) throw OutOfRange("carrier larger than 64 points");
    if ((bits & ~full_mask(carrier_size)) != 0) throw MalformedInput("set member outside carrier");
  }

  static PtSet empty(std::size_t n) { return PtSet(n); }
  static PtSet full(std::size_t n) { return PtSet(n, full_mask(n)); }
  static PtSet singleton(std::size_t n, std::size_t i) {
    if (i >= n) throw MalformedInput("point " + std::to_string(i) + " outside carrier");
    return PtSet(n, std::uint64_t{1} << i);
  }
  static PtSet of(std::size_t n, std::initializer_list<std::size_t> ids) {
    PtSet s(n);
    for (auto i : ids) s = s.with(i);
    return s;
  }

  static constexpr std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  std::size_t carrier_size() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(std::size_t i) const noexcept { return i < n_ && ((bits_ >> i) & 1U) != 0; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(n_); }

  PtSet with(std::size_t i) const { return *this | singleton(n_, i); }
  PtSet without(std::size_t i) const { return *this - singleton(n_, i); }
  PtSet complement() const noexcept { return PtSet(n_, ~bits_ & full_mask(n_), Unchecked{}); }

  bool is_subset_of(const PtSet& o) const {
    check_same(o);
    return (bits_ & ~o.bits_) == 0;
  }
  bool intersects(const PtSet& o) const {
    check_same(o);
    return (bits_ & o.bits_) != 0;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend PtSet operator|(const PtSet& a, const PtSet& b) {
    a.check_same(b);
    return PtSet(a.n_, a.bits_ | b.bits_, Unchecked{});
  }
  friend PtSet operator&(const PtSet& a, const PtSet& b) {
    a.check_same(b);
    return PtSet(a.n_, a.bits_ & b.bits_, Unchecked{});
  }
  friend PtSet operator-(const PtSet& a, const PtSet& b) {
    a.check_same(b);
    return PtSet(a.n_, a.bits_ & ~b.bits_, Unchecked{});
  }
  friend bool operator==(const PtSet&, const PtSet&) = default;

  void check_same(const PtSet& o) const {
    if (n_ != o.n_) {
      throw MalformedInput("carrier mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }
  }

 private:
  struct Unchecked {};
  PtSet(std::uint8_t n, std::uint64_t bits, Unchecked) : n_(n), bits_(bits) {}

  std::uint8_t n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Cardinality first, then lexicographic on the ascending member lists.
bool canonical_less(const PtSet& a, const PtSet& b);

/// Every subset of an n-point carrier, in canonical order. n must be at most 20.
std::vector<PtSet> all_subsets(std::size_t n);

/// Finite duplicate-free list of subsets; keeps insertion order, compares as a set.
class SetFamily {
 public:
  explicit SetFamily(std::size_t carrier_size = 0) : n_(carrier_size) {}
  SetFamily(std::size_t carrier_size, std::vector<PtSet> sets);

  /// Appends `s` unless an equal set is already present. Returns whether it was added.
  bool insert(const PtSet& s);

  std::size_t carrier_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  bool contains(const PtSet& s) const;

  const PtSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<PtSet>& sets() const noexcept { return sets_; }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  PtSet union_all() const;
  /// Intersection of all members; the full carrier for an empty family.
  PtSet intersection_all() const;

  /// Copy with members in canonical order, for deterministic output.
  SetFamily sorted() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b);

 private:
  std::size_t n_;
  std::vector<PtSet> sets_;
};

/// Axioms of a topology on an n-point carrier. Throws MalformedInput on carrier mismatch.
bool family_is_topology(const SetFamily& fam, std::size_t n);

/// Default point labels: a, b, ..., z, then p26, p27, ...
std::string default_label(std::size_t i);

}  // namespace deltatop
