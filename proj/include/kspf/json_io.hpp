#pragma once

// JSON boundary for the stable machine-readable schemas. Everything else in
// the library is dependency-free; only this header pulls in nlohmann/json.

#include <json.hpp>

#include "kspf/area.hpp"
#include "kspf/invariant.hpp"
#include "kspf/spf.hpp"

namespace kspf {

using Json = nlohmann::ordered_json;

inline Json presentation_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators.names();
  Json rel = Json::array();
  for (const Word& r : p.relators) rel.push_back(format_word(r));
  j["relators"] = std::move(rel);
  return j;
}

inline Json convention_json(const Convention& c) {
  Json j;
  j["over_is_larger_im"] = c.over_is_larger_im;
  j["positive_is_front_moves_right"] = c.positive_is_front_moves_right;
  return j;
}

inline Json invariant_json(const Word& w, const InvariantResult& r, const Convention& conv,
                           double wall_time_ms) {
  Json j;
  j["word"] = format_word(w);
  j["length"] = w.size();
  j["grid_bound"] = r.grid_bound;
  j["pruning"] = r.pruning;
  j["convention"] = convention_json(conv);
  j["count"] = r.count;
  Json pts = Json::array();
  for (const GridPoint& p : r.nontrivial_points)
    pts.push_back(Json::array({p.px.re, p.px.im, p.py.re, p.py.im}));
  j["nontrivial_points"] = std::move(pts);
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

inline Json certificate_json(const FillingCertificate& c) {
  Json j;
  j["word"] = format_word(c.target);
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json step;
    step["conjugator"] = format_word(s.conjugator);
    step["relator_index"] = s.relator_index;
    step["orientation"] = s.orientation;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j;
}

inline FillingCertificate certificate_from_json(const Json& j, const Presentation& p) {
  try {
    FillingCertificate c{parse_word(j.at("word").get<std::string>(), p.generators), {}};
    for (const auto& s : j.at("steps"))
      c.steps.push_back(
          CertificateStep{parse_word(s.at("conjugator").get<std::string>(), p.generators),
                          s.at("relator_index").get<int>(), s.at("orientation").get<int>()});
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate json: ") + e.what());
  }
}

}  // namespace kspf
