#include "causerep/json_io.hpp"

namespace causerep {

Json to_json(const Rational& value) {
  Json out;
  out["num"] = value.num;
  out["den"] = value.den;
  out["decimal"] = value.value();
  return out;
}

Json to_json(const AtomSet& atoms) {
  Json out = Json::array();
  for (const auto& atom : atoms) out.push_back(atom.str());
  return out;
}

Json to_json(const std::vector<AtomSet>& family) {
  Json out = Json::array();
  for (const auto& member : family) out.push_back(to_json(member));
  return out;
}

Json to_json(const CauseReport& report) {
  Json out;
  out["atom"] = report.cause.str();
  out["responsibility"] = to_json(report.responsibility);
  Json contingencies = Json::array();
  for (const auto& gamma : report.minimal_contingencies) contingencies.push_back(to_json(gamma));
  out["contingencies"] = contingencies;
  return out;
}

Json to_json(const CauseSet& causes) {
  Json out;
  out["instance"] = causes.instance_id;
  Json reports = Json::array();
  for (const auto& report : causes.reports) reports.push_back(to_json(report));
  out["causes"] = reports;
  return out;
}

Json to_json(const RepairSet& repairs) {
  Json out;
  out["kind"] = repairs.kind == RepairKind::Subset ? "s" : "c";
  Json list = Json::array();
  for (const auto& repair : repairs.repairs) {
    Json one;
    one["deleted"] = to_json(repair.deleted);
    one["atoms"] = to_json(repair.instance.atoms());
    list.push_back(one);
  }
  out["repairs"] = list;
  return out;
}

Json to_json(const std::vector<Diagnosis>& diagnoses) {
  Json out = Json::array();
  for (const auto& d : diagnoses) out.push_back(to_json(d.abnormal));
  return out;
}

Json to_json(const SystemDescription& sd) {
  Json out;
  out["completion_axioms"] = sd.completion_axioms;
  out["unique_names"] = sd.unique_names;
  out["constraint_ext"] = sd.constraint_ext;
  out["inclusion_dependencies"] = sd.inclusion_dependencies;
  out["normality_defaults"] = sd.normality_defaults;
  return out;
}

Json to_json(const CrosscheckReport& report) {
  Json out;
  out["all_passed"] = report.all_passed();
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    Json one;
    one["name"] = check.name;
    one["applicable"] = check.applicable;
    one["pass"] = check.applicable ? Json(check.pass) : Json(nullptr);
    one["detail"] = check.detail;
    checks.push_back(one);
  }
  out["checks"] = checks;
  return out;
}

}  // namespace causerep
