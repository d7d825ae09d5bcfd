#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "deltatop/core_sets.hpp"
#include "deltatop/finite_space.hpp"
#include "deltatop/real_line.hpp"

namespace deltatop {

/// Total function between the carriers of two finite spaces.
class SpaceMap {
 public:
  SpaceMap(std::shared_ptr<const FinSpace> dom, std::shared_ptr<const FinSpace> cod, std::vector<std::size_t> table);

  static SpaceMap identity(std::shared_ptr<const FinSpace> s);

  const FinSpace& dom() const noexcept { return *dom_; }
  const FinSpace& cod() const noexcept { return *cod_; }
  const std::shared_ptr<const FinSpace>& dom_ptr() const noexcept { return dom_; }
  const std::shared_ptr<const FinSpace>& cod_ptr() const noexcept { return cod_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t operator()(std::size_t x) const { return table_.at(x); }

  PtSet image(const PtSet& a) const;
  PtSet preimage(const PtSet& b) const;

 private:
  std::shared_ptr<const FinSpace> dom_;
  std::shared_ptr<const FinSpace> cod_;
  std::vector<std::size_t> table_;
};

struct MapClass {
  bool continuous = false;
  bool open = false;
  bool closed = false;

  friend bool operator==(const MapClass&, const MapClass&) = default;
};

MapClass classify_map(const SpaceMap& f);

/// Not-applicable is reported when the map misses a theorem's hypothesis.
enum class Verdict { pass, fail, not_applicable };

struct MapCheck {
  Verdict verdict = Verdict::not_applicable;
  std::optional<PtSet> witness;  // the offending set on failure

  bool ok() const noexcept { return verdict == Verdict::pass; }
};

/// For open continuous f: preimages of regular open sets are regular open.
MapCheck preimage_regular_open_ok(const SpaceMap& f);
/// For open continuous f: preimages of delta-open sets are delta-open.
MapCheck preimage_delta_open_ok(const SpaceMap& f);
/// Images of delta-closed sets are delta-closed. Never not-applicable.
MapCheck is_delta_closed_map(const SpaceMap& f);
/// For open continuous f: f(X) is delta-compact in the codomain.
MapCheck image_delta_compact_ok(const SpaceMap& f);

/// x -> x^2 on the real line evaluated on a regular open set U.
struct SquareMapCase {
  IntervalSet u;
  IntervalSet preimage;
  bool u_regular_open = false;
  bool preimage_regular_open = false;
  /// x^2 is continuous but not open on the real line, so the regular-open
  /// preimage theorem does not apply.
  Verdict theorem_applicability = Verdict::not_applicable;
};

SquareMapCase square_map_case(const IntervalSet& u);

}  // namespace deltatop
