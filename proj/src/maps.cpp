#include "deltatop/maps.hpp"

#include "deltatop/covers.hpp"

namespace deltatop {

SpaceMap::SpaceMap(std::shared_ptr<const FinSpace> dom, std::shared_ptr<const FinSpace> cod,
                   std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (!dom_ || !cod_) throw MalformedInput("map needs a domain and a codomain");
  if (table_.size() != dom_->size()) throw MalformedInput("map table must cover every domain point");
  for (auto y : table_) {
    if (y >= cod_->size()) throw MalformedInput("map image outside the codomain");
  }
}

SpaceMap SpaceMap::identity(std::shared_ptr<const FinSpace> s) {
  std::vector<std::size_t> t(s->size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return SpaceMap(s, s, std::move(t));
}

PtSet SpaceMap::image(const PtSet& a) const {
  dom_->check_carrier(a);
  PtSet out = cod_->none();
  for (auto x : a.members()) out = out.with(table_[x]);
  return out;
}

PtSet SpaceMap::preimage(const PtSet& b) const {
  cod_->check_carrier(b);
  PtSet out = dom_->none();
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (b.contains(table_[x])) out = out.with(x);
  }
  return out;
}

MapClass classify_map(const SpaceMap& f) {
  MapClass c{true, true, true};
  for (const auto& v : f.cod().opens()) {
    if (!f.dom().is_open(f.preimage(v))) {
      c.continuous = false;
      break;
    }
  }
  for (const auto& u : f.dom().opens()) {
    if (!f.cod().is_open(f.image(u))) c.open = false;
    if (!f.cod().is_closed(f.image(u.complement()))) c.closed = false;
  }
  return c;
}

namespace {

bool open_continuous(const SpaceMap& f) {
  const MapClass c = classify_map(f);
  return c.continuous && c.open;
}

}  // namespace

MapCheck preimage_regular_open_ok(const SpaceMap& f) {
  if (!open_continuous(f)) return {};
  for (const auto& u : regular_open_family(f.cod())) {
    if (!is_regular_open(f.dom(), f.preimage(u))) return {Verdict::fail, u};
  }
  return {Verdict::pass, std::nullopt};
}

MapCheck preimage_delta_open_ok(const SpaceMap& f) {
  if (!open_continuous(f)) return {};
  for (const auto& u : delta_open_family(f.cod())) {
    if (!is_delta_open(f.dom(), f.preimage(u))) return {Verdict::fail, u};
  }
  return {Verdict::pass, std::nullopt};
}

MapCheck is_delta_closed_map(const SpaceMap& f) {
  for (const auto& c : delta_closed_family(f.dom())) {
    if (!is_delta_closed(f.cod(), f.image(c))) return {Verdict::fail, c};
  }
  return {Verdict::pass, std::nullopt};
}

MapCheck image_delta_compact_ok(const SpaceMap& f) {
  if (!open_continuous(f)) return {};
  const PtSet img = f.image(f.dom().all());
  if (!is_delta_compact(f.cod(), img)) return {Verdict::fail, img};
  return {Verdict::pass, std::nullopt};
}

SquareMapCase square_map_case(const IntervalSet& u) {
  SquareMapCase c;
  c.u = u;
  c.preimage = preimage_square(u);
  c.u_regular_open = is_regular_open_r(u);
  c.preimage_regular_open = is_regular_open_r(c.preimage);
  c.theorem_applicability = Verdict::not_applicable;
  return c;
}

}  // namespace deltatop
