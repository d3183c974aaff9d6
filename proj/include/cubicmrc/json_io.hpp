/*
   Copyright 2026 The cubicmrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CUBICMRC_JSON_IO_HPP
#define CUBICMRC_JSON_IO_HPP

#include <json.hpp>

#include "cubic_lab.hpp"
#include "liaison.hpp"
#include "mrc.hpp"
#include "resolution.hpp"

namespace cubicmrc {

using json = nlohmann::ordered_json;

inline json to_json(const BettiDiagram& B) {
  json entries = json::array();
  for (const auto& [k, b] : B.entries()) entries.push_back({{"i", k.first}, {"j", k.second}, {"b", b}});
  return {{"presentation", "R/I"}, {"entries", entries}};
}

inline BettiDiagram betti_from_json(const json& j) {
  if (j.value("presentation", "R/I") != "R/I") throw std::invalid_argument("betti_from_json: unsupported presentation");
  BettiDiagram B;
  for (const auto& e : j.at("entries")) B.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("b").get<int>());
  return B;
}

inline json to_json(const PredictionSource& s) {
  if (s.kind == PredictionSource::Kind::q_formula) return {{"kind", "q_formula"}};
  return {{"kind", "theorem_family"}, {"family", std::string(1, family_char(s.family))}, {"a", s.a}};
}

/// BettiDiagram JSON plus "z", "r" and "source".
inline json to_json(const Prediction& p) {
  json j = to_json(p.diagram);
  j["z"] = p.z;
  j["r"] = p.r;
  j["source"] = to_json(p.source);
  return j;
}

inline json to_json(const ResolutionShape& s) {
  return {{"modules", s.modules}, {"text", s.to_string()}};
}

/// Twist lists plus the matrices in the textual polynomial format.
inline json to_json(const FreeResolution& res, bool with_matrices = true) {
  json j;
  json mods = json::array();
  for (const auto& m : res.modules) mods.push_back(m.twists);
  j["modules"] = mods;
  if (with_matrices) {
    json maps = json::array();
    for (const auto& d : res.maps) {
      json rows = json::array();
      for (std::size_t r = 0; r < d.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c).to_string());
        rows.push_back(row);
      }
      maps.push_back(rows);
    }
    j["maps"] = maps;
  }
  return j;
}

inline json to_json(const Cancellation& c) {
  return {{"twist", c.twist}, {"count", c.count}, {"between", {c.lower, c.lower + 1}}, {"stage", c.stage},
          {"text", c.to_string()}};
}

/// Link-chain step: {index, a, curve, n, n_prime, deg_G, shapes, cancellations, verdict}.
inline json to_json(const LinkResult& r) {
  json shapes = {{"input", to_json(r.input)}};
  if (r.spec.index != 1) shapes["on_curve"] = to_json(r.on_curve);
  shapes["gorenstein"] = to_json(r.gorenstein);
  shapes["nonminimal"] = to_json(r.nonminimal);
  shapes["output"] = to_json(r.output);
  shapes["expected"] = to_json(r.expected);
  json cancels = json::array();
  for (const auto& c : r.cancellations) cancels.push_back(to_json(c));
  const auto& s = r.spec;
  return {{"index", s.index},
          {"a", s.a},
          {"curve", s.curve.to_string()},
          {"divisor", s.divisor.to_string()},
          {"from", std::string(1, family_char(s.from_family)) + "(" + std::to_string(s.from_a) + ")"},
          {"to", std::string(1, family_char(s.to_family)) + "(" + std::to_string(s.to_a) + ")"},
          {"n", s.n},
          {"n_prime", s.n_prime},
          {"deg_G", s.deg_G},
          {"socle_twist", s.socle_twist},
          {"shapes", shapes},
          {"cancellations", cancels},
          {"verdict", r.matches ? "pass" : "fail"}};
}

inline json chain_to_json(int a_from, int a_to, const std::vector<LinkResult>& steps) {
  json arr = json::array();
  bool pass = true;
  for (const auto& s : steps) {
    arr.push_back(to_json(s));
    pass = pass && s.matches;
  }
  return {{"a_from", a_from}, {"a_to", a_to}, {"steps", arr}, {"verdict", pass ? "pass" : "fail"}};
}

inline json to_json(const MrcVerdict& v) {
  json j = {{"pass", v.pass}};
  if (v.witness) j["witness_i"] = *v.witness;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

inline json points_to_json(const std::vector<ProjectivePoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(p.coordinates());
  return arr;
}

inline json to_json(const ExperimentConfig& c) {
  json j = {{"prime", c.prime}, {"seed", c.seed}};
  j["family"] = c.family ? json(std::string(1, family_char(*c.family))) : json(nullptr);
  j["a"] = c.family ? json(c.a) : json(nullptr);
  j["z"] = c.z ? json(*c.z) : json(nullptr);
  j["trials"] = c.trials;
  j["surface"] = c.surface == SurfaceKind::fermat ? "fermat" : "random";
  j["points_file"] = c.points.has_value();
  return j;
}

/// RunReport JSON; timings are omitted when `with_timings` is false so that
/// equal configurations give byte-identical output.
inline json to_json(const RunReport& r, bool with_timings = true) {
  json trials = json::array();
  for (const auto& t : r.trials) {
    json jt = {{"index", t.index},
               {"seeds", t.seeds},
               {"resampled", t.resampled},
               {"points", points_to_json(t.points)},
               {"computed", to_json(t.computed)},
               {"generality_signature", t.generality_ok},
               {"diagram_match", t.diagram_match},
               {"hilbert_series_match", t.hilbert_ok}};
    jt["mrc"] = t.mrc ? to_json(*t.mrc) : json(nullptr);
    if (!t.note.empty()) jt["note"] = t.note;
    if (with_timings) jt["seconds"] = t.seconds;
    jt["verdict"] = t.pass ? "pass" : "fail";
    trials.push_back(jt);
  }
  json j = {{"config", to_json(r.config)},
            {"surface", r.surface},
            {"z", r.z},
            {"d_max", r.d_max},
            {"prediction", to_json(r.prediction)}};
  j["theorem_diagram"] = r.theorem_diagram ? to_json(*r.theorem_diagram) : json(nullptr);
  j["trials"] = trials;
  j["verdict"] = r.pass ? "pass" : "fail";
  return j;
}

inline json to_json(const FirstLinkReport& r, bool with_timings = true) {
  json forms = json::array();
  for (const auto& f : r.forms) forms.push_back(f.to_string());
  json j = {{"a", r.a},
            {"prime", r.prime},
            {"seed", r.seed},
            {"n", r.n},
            {"n_prime_expected", r.n_prime_expected},
            {"deg_ci", r.deg_ci},
            {"deg_residual", r.deg_residual},
            {"form_retries", r.form_retries},
            {"forms", forms},
            {"start_diagram", to_json(r.start_diagram)},
            {"residual_diagram", to_json(r.residual_diagram)},
            {"expected_residual", to_json(r.expected_residual)},
            {"degree_ok", r.degree_ok},
            {"diagram_match", r.diagram_match},
            {"involution_ok", r.involution_ok}};
  if (with_timings) j["seconds"] = r.seconds;
  j["verdict"] = r.pass ? "pass" : "fail";
  return j;
}

}  // namespace cubicmrc

#endif  // CUBICMRC_JSON_IO_HPP
