#include <algorithm>

#include <json.hpp>

#include "tanglekit/io.hpp"

namespace tanglekit {

using nlohmann::json;

PlanarTangleDiagram diagram_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid diagram JSON: ") + e.what());
  }
  try {
    PlanarTangleDiagram d;
    d.annulus = j.value("annulus", false);
    for (const auto& c : j.value("crossings", json::array())) {
      if (!c.is_array() || c.size() != 5) throw Error("crossing must be [e1, e2, e3, e4, \"+\"|\"-\"]");
      const std::string flag = c[4].get<std::string>();
      Crossing x;
      for (int s = 0; s < 4; ++s) x.edges[s] = c[s].get<int>();
      if (flag == "-")
        std::rotate(x.edges.begin(), x.edges.begin() + 1, x.edges.end());
      else if (flag != "+")
        throw Error("crossing flag must be \"+\" or \"-\"");
      d.crossings.push_back(x);
    }
    if (j.contains("boundary")) {
      const auto& b = j["boundary"];
      if (b.contains("top") || b.contains("bottom")) {
        d.top = b.value("top", std::vector<int>{});
        d.bottom = b.value("bottom", std::vector<int>{});
      } else {
        d.top = {b.at("NW").get<int>(), b.at("NE").get<int>()};
        d.bottom = {b.at("SW").get<int>(), b.at("SE").get<int>()};
      }
    }
    for (const auto& [k, w] : j.value("winding", json::object()).items()) d.winding[std::stoi(k)] = w.get<int>();
    for (const auto& jn : j.value("joins", json::array()))
      d.joins.push_back({jn.at(0).get<int>(), jn.at(1).get<int>(), jn.size() > 2 ? jn.at(2).get<int>() : 0});
    d.free_loops = j.value("free_loops", std::vector<int>{});
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw Error(std::string("invalid diagram JSON: ") + e.what());
  }
}

std::string diagram_to_json(const PlanarTangleDiagram& d) {
  json j;
  j["crossings"] = json::array();
  for (const auto& c : d.crossings) j["crossings"].push_back({c.edges[0], c.edges[1], c.edges[2], c.edges[3], "+"});
  j["boundary"] = {{"top", d.top}, {"bottom", d.bottom}};
  json w = json::object();
  for (const auto& [e, v] : d.winding) w[std::to_string(e)] = v;
  j["winding"] = w;
  j["joins"] = json::array();
  for (const auto& jn : d.joins) j["joins"].push_back({jn.from, jn.to, jn.winding});
  j["free_loops"] = d.free_loops;
  j["annulus"] = d.annulus;
  return j.dump();
}

}  // namespace tanglekit
