#include <json.hpp>

#include "sanecol/errors.hpp"
#include "sanecol/reduction.hpp"

namespace sanecol {

using ordered_json = nlohmann::ordered_json;

std::string reduction_map_to_json(const ReductionMap& map) {
  ordered_json doc;
  doc["k"] = map.k;
  doc["n"] = map.n;
  doc["e"] = map.e;
  doc["t"] = map.t;
  doc["f"] = map.f;
  doc["r"] = map.r;

  auto rows = ordered_json::array();
  for (Vertex i = 0; i < map.n; ++i) {
    auto row = ordered_json::array();
    for (Color j = 0; j < map.k; ++j) row.push_back(map.indicator_at(i, j));
    rows.push_back(std::move(row));
  }
  doc["indicator"] = std::move(rows);

  auto gadgets = ordered_json::array();
  for (const auto& [tag, g] : map.gadgets) {
    ordered_json entry;
    entry["tag"] = to_string(tag);
    entry["boundary"] = g.boundary;
    entry["internal_start"] = g.internal_start;
    entry["internal_len"] = g.internal_len;
    gadgets.push_back(std::move(entry));
  }
  doc["gadgets"] = std::move(gadgets);
  return doc.dump(1) + "\n";
}

ReductionMap reduction_map_from_json(const std::string& text) {
  try {
    const auto doc = ordered_json::parse(text);
    ReductionMap map;
    map.k = doc.at("k").get<Color>();
    map.n = doc.at("n").get<std::size_t>();
    map.e = doc.at("e").get<std::size_t>();
    map.t = doc.at("t").get<Vertex>();
    map.f = doc.at("f").get<Vertex>();
    map.r = doc.at("r").get<Vertex>();

    const auto& rows = doc.at("indicator");
    if (rows.size() != map.n) throw ParseError(0, "indicator table must have n rows");
    for (const auto& row : rows) {
      if (row.size() != map.k) throw ParseError(0, "indicator rows must have k entries");
      for (const auto& v : row) map.indicator.push_back(v.get<Vertex>());
    }

    for (const auto& entry : doc.at("gadgets")) {
      TaggedGadget tg;
      tg.tag = parse_gadget_tag(entry.at("tag").get<std::string>());
      const auto boundary = entry.at("boundary").get<std::vector<Vertex>>();
      tg.instance = replay_chain_gadget(boundary, entry.at("internal_start").get<Vertex>());
      if (tg.instance.internal_len != entry.at("internal_len").get<std::size_t>()) {
        throw ParseError(0, "gadget " + to_string(tg.tag) + " has inconsistent internal_len");
      }
      map.gadgets.push_back(std::move(tg));
    }
    return map;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("reduction map: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ParseError(0, std::string("reduction map: ") + e.what());
  }
}

}  // namespace sanecol
