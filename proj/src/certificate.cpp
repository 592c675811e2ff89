#include "gulf/certificate.hpp"

#include <json.hpp>

#include "gulf/io.hpp"

namespace gulf {

using ojson = nlohmann::ordered_json;

std::string cover_to_json(const Cover &c, int indent) {
  ojson j;
  j["host"] = to_graph6(c.host);
  j["class"] = c.claims.class_name;
  j["guests"] = ojson::array();
  for (const auto &g : c.guests) {
    ojson e;
    e["graph"] = to_graph6(g.graph);
    e["map"] = g.map;
    j["guests"].push_back(e);
  }
  ojson claims;
  claims["injective"] = c.claims.injective;
  claims["locality"] = c.claims.locality;
  claims["globality"] = c.claims.globality;
  if (c.claims.layers)
    claims["layers"] = *c.claims.layers;
  else
    claims["layers"] = nullptr;
  j["claims"] = claims;
  return j.dump(indent);
}

Cover cover_from_json(const std::string &text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("certificate: invalid JSON: ") + e.what());
  }
  try {
    Cover c;
    c.host = parse_graph6(j.at("host").get<std::string>());
    c.claims.class_name = j.at("class").get<std::string>();
    for (const auto &g : j.at("guests")) {
      CoverGuest cg;
      cg.graph = parse_graph6(g.at("graph").get<std::string>());
      cg.map = g.at("map").get<std::vector<int>>();
      c.guests.push_back(std::move(cg));
    }
    const auto &cl = j.at("claims");
    c.claims.injective = cl.at("injective").get<bool>();
    c.claims.locality = cl.at("locality").get<int>();
    c.claims.globality = cl.at("globality").get<int>();
    if (cl.contains("layers") && !cl.at("layers").is_null())
      c.claims.layers = cl.at("layers").get<std::vector<std::vector<int>>>();
    return c;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

} // namespace gulf
