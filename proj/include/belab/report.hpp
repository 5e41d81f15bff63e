#pragma once

// Structured (JSON) report rendering.  The JSON and human-readable renderings
// carry the same content; the schema is versioned so downstream consumers can
// detect changes.

#include <string>
#include <vector>

#include <json.hpp>

#include "belab/classify.hpp"
#include "belab/metatheorems.hpp"

namespace belab {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::json;

inline Json witness_json(const std::vector<Elem>& witness,
                         const std::vector<std::string>& var_names,
                         const std::vector<std::string>& elem_names) {
  Json w = Json::object();
  for (std::size_t i = 0; i < witness.size(); ++i) {
    std::string var = i < var_names.size() ? var_names[i] : "v" + std::to_string(i);
    Elem e = witness[i];
    w[var] = (e >= 0 && static_cast<std::size_t>(e) < elem_names.size())
                 ? elem_names[e]
                 : std::to_string(e);
  }
  return w;
}

inline Json axiom_result_json(const AxiomCheckResult& r, const std::vector<std::string>& names) {
  Json j;
  j["axiom"] = r.axiom;
  j["holds"] = r.holds;
  j["evaluations"] = r.evaluations;
  if (r.witness) {
    j["witness"] = witness_json(*r.witness, r.witness_variables, names);
    j["failing_formula"] = r.failing_formula;
  }
  return j;
}

inline Json classification_json(const ClassificationReport& rep,
                                const std::vector<std::string>& names) {
  Json j;
  j["algebra"] = rep.algebra_id;
  j["seconds"] = rep.seconds;
  Json classes = Json::array();
  for (const auto& v : rep.verdicts) {
    Json c;
    c["class"] = v.class_id;
    c["member"] = v.member;
    Json fails = Json::array();
    for (const auto& f : v.failing_axioms) fails.push_back(axiom_result_json(f, names));
    c["failing_axioms"] = std::move(fails);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

inline Json metatheorem_json(const MetatheoremReport& rep) {
  Json j;
  j["theorem"] = rep.id;
  j["statement"] = rep.statement;
  j["models_examined"] = rep.models_examined;
  j["holds"] = rep.holds();
  Json v = Json::array();
  for (const auto& viol : rep.violations)
    v.push_back({{"algebra", viol.algebra_id}, {"detail", viol.detail}});
  j["violations"] = std::move(v);
  return j;
}

inline Json validation_json(const ValidationReport& rep, const std::vector<std::string>& names) {
  Json j;
  j["ok"] = rep.ok();
  j["structural"] = rep.structural;
  Json v = Json::array();
  for (const auto& viol : rep.violations) {
    Json e;
    e["axiom"] = viol.axiom;
    Json w = Json::array();
    for (Elem x : viol.witness)
      w.push_back(x >= 0 && static_cast<std::size_t>(x) < names.size() ? names[x]
                                                                       : std::to_string(x));
    e["witness"] = std::move(w);
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return j;
}

// Top-level report envelope shared by all CLI commands.
inline Json report_envelope(const std::string& command, const std::vector<std::string>& inputs) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  return j;
}

}  // namespace belab
