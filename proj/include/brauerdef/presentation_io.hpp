#pragma once

// JSON form of a quiver presentation:
//   {"vertices": ["1", "2"],
//    "arrows": [{"name": "a", "source": "1", "target": "2", "degree": 1}],
//    "relations": [[{"coeff": "1", "path": ["b", "a"]}]]}
// Paths list arrow names in product order (the rightmost is applied first);
// coefficients are exact rationals written "p/q".

#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "brauerdef/quiver.hpp"
#include "brauerdef/scalar.hpp"

namespace brauerdef {

using Json = nlohmann::ordered_json;

inline Json presentationToJson(const QuiverPresentation& p) {
  const Quiver& q = p.quiver();
  Json j;
  j["vertices"] = q.vertices();
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows())
    j["arrows"].push_back({{"name", a.name},
                           {"source", q.vertices()[a.source]},
                           {"target", q.vertices()[a.target]},
                           {"degree", a.degree}});
  j["relations"] = Json::array();
  for (const auto& r : p.relations()) {
    Json terms = Json::array();
    for (const auto& t : r) {
      std::vector<std::string> names;
      for (auto a : t.path.arrows) names.push_back(q.arrow(a).name);
      terms.push_back({{"coeff", toString(t.coeff)}, {"path", names}});
    }
    j["relations"].push_back(std::move(terms));
  }
  return j;
}

inline Rational jsonRational(const Json& v) {
  if (v.is_string()) return parseRational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("coefficients must be integers or \"p/q\" strings");
}

inline QuiverPresentation presentationFromJson(const Json& j) {
  Quiver q(j.at("vertices").get<std::vector<std::string>>());
  auto vertex = [&](const Json& v) {
    auto i = q.findVertex(v.get<std::string>());
    if (!i) throw std::invalid_argument("unknown vertex " + v.get<std::string>());
    return *i;
  };
  for (const auto& a : j.at("arrows"))
    q.addArrow(a.at("name").get<std::string>(), vertex(a.at("source")), vertex(a.at("target")),
               a.value("degree", 1u));
  QuiverPresentation p(std::move(q));
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      std::vector<std::pair<Rational, std::vector<std::string>>> terms;
      for (const auto& t : r)
        terms.push_back({jsonRational(t.at("coeff")), t.at("path").get<std::vector<std::string>>()});
      p.addRelation(terms);
    }
  return p;
}

inline QuiverPresentation readPresentation(std::istream& in) {
  return presentationFromJson(Json::parse(in));
}

}  // namespace brauerdef
