#include "davkit/core/serialize.hpp"

namespace davkit {

namespace {

json lattice_to_json(const LatticeSet& x) {
  if (auto i = std::get_if<Interval>(&x)) return json{{"type", "interval"}, {"lo", i->lo}, {"hi", i->hi}};
  if (auto b = std::get_if<Box>(&x)) {
    json axes = json::array();
    for (const auto& a : b->axes) axes.push_back({a.lo, a.hi});
    return json{{"type", "box"}, {"axes", std::move(axes)}};
  }
  const auto& s = std::get<ExplicitSet>(x);
  json elems = json::array();
  for (const auto& e : s.elements) elems.push_back(e.coords());
  return json{{"type", "explicit"}, {"dim", s.elements.front().dim()}, {"elements", std::move(elems)}};
}

LatticeSet lattice_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "interval") return make_interval(j.at("lo").get<i64>(), j.at("hi").get<i64>());
  if (type == "box") {
    std::vector<Interval> axes;
    for (const auto& a : j.at("axes")) axes.push_back(make_interval(a.at(0).get<i64>(), a.at(1).get<i64>()));
    return make_box(std::move(axes));
  }
  if (type == "explicit") {
    std::vector<Element> elems;
    for (const auto& e : j.at("elements")) {
      elems.emplace_back(e.is_array() ? e.get<std::vector<i64>>() : std::vector<i64>{e.get<i64>()});
    }
    return make_explicit(std::move(elems));
  }
  throw InvalidArgument("unknown lattice set type '" + type + "'");
}

}  // namespace

json to_json(const GroundSet& g) {
  if (auto p = std::get_if<GroupProduct>(&g)) {
    return json{{"type", "product"}, {"group", p->group.factors()}, {"base", lattice_to_json(p->base)}};
  }
  return lattice_to_json(lattice_part(g));
}

GroundSet ground_set_from_json(const json& j) {
  try {
    if (j.at("type").get<std::string>() == "product") {
      return make_product(GroupSpec(j.at("group").get<std::vector<i64>>()), lattice_from_json(j.at("base")));
    }
    return as_ground(lattice_from_json(j));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ground-set JSON: ") + e.what());
  }
}

json to_json(const Element& e) { return e.coords(); }

json to_json(const MixedElement& e) {
  if (e.group_part.empty()) return to_json(e.lattice);
  return json{{"group", e.group_part}, {"lattice", e.lattice.coords()}};
}

json to_json(const Sequence& s) {
  json entries = json::array();
  for (const auto& [e, k] : s.entries()) {
    json en{{"element", e.lattice.coords()}};
    if (s.is_mixed()) en["group"] = e.group_part;
    en["count"] = k;
    entries.push_back(std::move(en));
  }
  return json{{"text", to_string(s)}, {"length", s.length()}, {"entries", std::move(entries)}};
}

Sequence sequence_from_json(const json& j, const GroupSpec& group) {
  try {
    std::vector<Sequence::Entry> raw;
    std::size_t dim = 0;
    for (const auto& en : j.at("entries")) {
      Element x(en.at("element").get<std::vector<i64>>());
      dim = x.dim();
      std::vector<i64> g = en.contains("group") ? en.at("group").get<std::vector<i64>>() : std::vector<i64>{};
      raw.emplace_back(MixedElement(std::move(g), std::move(x)), en.at("count").get<i64>());
    }
    if (raw.empty()) throw InvalidArgument("sequence JSON has no entries");
    return Sequence::from_counts(group, dim, raw);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed sequence JSON: ") + e.what());
  }
}

}  // namespace davkit
