#include "deltatop/json_io.hpp"

namespace deltatop {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t label_index(const std::vector<std::string>& labels, const Json& label) {
  if (!label.is_string()) throw MalformedInput("point labels must be strings");
  const auto& l = label.get_ref<const std::string&>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == l) return i;
  }
  throw MalformedInput("unknown point '" + l + "'");
}

std::size_t point_index(const FinSpace& s, const Json& label) { return label_index(s.labels(), label); }

PtSet labels_to_set(const std::vector<std::string>& labels, const Json& j) {
  if (!j.is_array()) throw MalformedInput("a set must be an array of labels");
  PtSet out = PtSet::empty(labels.size());
  for (const auto& l : j) out = out.with(label_index(labels, l));
  return out;
}

}  // namespace

Json set_to_json(const FinSpace& s, const PtSet& a) {
  s.check_carrier(a);
  Json out = Json::array();
  for (auto x : a.members()) out.push_back(s.label(x));
  return out;
}

PtSet set_from_json(const FinSpace& s, const Json& j) { return labels_to_set(s.labels(), j); }

Json family_to_json(const FinSpace& s, const SetFamily& f, bool keep_order) {
  Json out = Json::array();
  for (const auto& a : keep_order ? f : f.sorted()) out.push_back(set_to_json(s, a));
  return out;
}

SetFamily family_from_json(const FinSpace& s, const Json& j) {
  if (!j.is_array()) throw MalformedInput("a family must be an array of sets");
  SetFamily out(s.size());
  for (const auto& a : j) out.insert(set_from_json(s, a));
  return out;
}

Json space_to_json(const FinSpace& s) {
  Json out;
  out["points"] = s.labels();
  out["opens"] = family_to_json(s, s.opens());
  return out;
}

FinSpace space_from_json(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw MalformedInput("'points' must be an array");
  std::vector<std::string> labels;
  for (const auto& p : pts) {
    if (!p.is_string()) throw MalformedInput("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  const Json& opens = field(j, "opens");
  if (!opens.is_array()) throw MalformedInput("'opens' must be an array of sets");
  SetFamily family(labels.size());
  for (const auto& a : opens) family.insert(labels_to_set(labels, a));
  return FinSpace::from_opens(std::move(labels), std::move(family));
}

Json profile_to_json(const SeparationProfile& p) {
  Json out;
  out["T0"] = p.t0;
  out["T1"] = p.t1;
  out["T2"] = p.t2;
  out["regular"] = p.regular;
  out["T3"] = p.t3;
  out["normal"] = p.normal;
  out["T4"] = p.t4;
  return out;
}

SeparationProfile profile_from_json(const Json& j) {
  SeparationProfile p;
  p.t0 = field(j, "T0").get<bool>();
  p.t1 = field(j, "T1").get<bool>();
  p.t2 = field(j, "T2").get<bool>();
  p.regular = field(j, "regular").get<bool>();
  p.t3 = field(j, "T3").get<bool>();
  p.normal = field(j, "normal").get<bool>();
  p.t4 = field(j, "T4").get<bool>();
  return p;
}

Json map_to_json(const SpaceMap& f) {
  Json out;
  out["dom"] = space_to_json(f.dom());
  out["cod"] = space_to_json(f.cod());
  Json table = Json::object();
  for (std::size_t x = 0; x < f.dom().size(); ++x) table[f.dom().label(x)] = f.cod().label(f(x));
  out["table"] = table;
  return out;
}

SpaceMap map_from_json(const Json& j) {
  auto dom = std::make_shared<const FinSpace>(space_from_json(field(j, "dom")));
  auto cod = std::make_shared<const FinSpace>(space_from_json(field(j, "cod")));
  const Json& table = field(j, "table");
  if (!table.is_object()) throw MalformedInput("'table' must be an object");
  std::vector<std::size_t> t(dom->size());
  std::vector<bool> seen(dom->size(), false);
  for (const auto& [from, to] : table.items()) {
    const std::size_t x = point_index(*dom, Json(from));
    t[x] = point_index(*cod, to);
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw MalformedInput("map table has no image for '" + dom->label(x) + "'");
  }
  return SpaceMap(dom, cod, std::move(t));
}

Json cover_to_json(const Cover& c) {
  Json out;
  out["space"] = space_to_json(c.space());
  out["target"] = set_to_json(c.space(), c.target());
  out["family"] = family_to_json(c.space(), c.family(), true);
  out["mode"] = c.mode() == CoverMode::delta_open ? "delta_open" : "open";
  return out;
}

Cover cover_from_json(const Json& j) {
  FinSpace s = space_from_json(field(j, "space"));
  PtSet target = set_from_json(s, field(j, "target"));
  SetFamily family = family_from_json(s, field(j, "family"));
  CoverMode mode = CoverMode::delta_open;
  if (j.contains("mode")) {
    const auto m = j.at("mode").get<std::string>();
    if (m == "open") {
      mode = CoverMode::open;
    } else if (m != "delta_open") {
      throw MalformedInput("cover mode must be 'open' or 'delta_open'");
    }
  }
  return Cover(std::move(s), target, std::move(family), mode);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

}  // namespace deltatop
