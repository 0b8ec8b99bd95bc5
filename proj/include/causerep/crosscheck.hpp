#pragma once

#include <optional>
#include <string>
#include <vector>

#include "causerep/oracle.hpp"
#include "causerep/query.hpp"
#include "causerep/reports.hpp"

namespace causerep {

struct CheckResult {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::string detail;  // counterexample payload on failure, or why skipped
};

struct CrosscheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (c.applicable && !c.pass) return false;
    }
    return true;
  }
};

// Runs every reduction-equivalence check that applies to the given input:
// each bridge operation against its brute-force oracle, the diagnosis route
// against the oracle, and the hitting-set duality between repair deletions
// and conflict-hypergraph hitting sets. Constraints default to kappa(Q)
// when only a query is given. Inputs beyond the oracle budget are rejected.
CrosscheckReport crosscheck(const Instance& db, const std::optional<ConjunctiveQuery>& query,
                            const std::vector<DenialConstraint>& dcs,
                            oracle::OracleBudget oracle_budget = {}, SearchBudget* budget = nullptr);

// The repairs-from-causes check alone, with a caller-supplied package; lets
// callers probe what a wrong package does to the equivalence.
CheckResult check_repairs_from_causes(const Instance& db, const std::vector<DenialConstraint>& dcs,
                                      const CausePackage& package,
                                      oracle::OracleBudget oracle_budget = {},
                                      SearchBudget* budget = nullptr);

}  // namespace causerep
