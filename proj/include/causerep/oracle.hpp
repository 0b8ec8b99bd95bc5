#pragma once

#include <vector>

#include "causerep/query.hpp"
#include "causerep/reports.hpp"

namespace causerep {
namespace oracle {

// Brute-force reference implementations, straight from the definitions.
// They enumerate powersets, so they refuse universes above the budget, and
// they deliberately share nothing with the engines beyond the relational
// core and query evaluation.

struct OracleBudget {
  std::size_t max_subset_universe = 12;
};

CauseSet brute_causes(const Instance& db, const ConjunctiveQuery& query, OracleBudget budget = {});

RepairSet brute_s_repairs(const Instance& db, const std::vector<DenialConstraint>& dcs,
                          OracleBudget budget = {});

RepairSet brute_c_repairs(const Instance& db, const std::vector<DenialConstraint>& dcs,
                          OracleBudget budget = {});

std::vector<Diagnosis> brute_min_diagnoses(const Instance& db, const ConjunctiveQuery& query,
                                           OracleBudget budget = {});

}  // namespace oracle
}  // namespace causerep
