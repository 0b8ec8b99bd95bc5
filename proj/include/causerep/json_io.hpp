#pragma once

#include <json.hpp>

#include "causerep/crosscheck.hpp"
#include "causerep/diagnosis.hpp"
#include "causerep/reports.hpp"

namespace causerep {

// All serialization uses ordered_json and canonically ordered inputs, so a
// given result always renders to the same bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const AtomSet& atoms);
Json to_json(const std::vector<AtomSet>& family);
Json to_json(const CauseReport& report);
Json to_json(const CauseSet& causes);
Json to_json(const RepairSet& repairs);
Json to_json(const std::vector<Diagnosis>& diagnoses);
Json to_json(const SystemDescription& sd);
Json to_json(const CrosscheckReport& report);

}  // namespace causerep
