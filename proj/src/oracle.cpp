#include "causerep/oracle.hpp"

#include <algorithm>

namespace causerep {
namespace oracle {

namespace {

void check_budget(std::size_t universe, const OracleBudget& budget) {
  if (universe > budget.max_subset_universe)
    throw Error(ErrorKind::BudgetExceeded, "universe of " + std::to_string(universe) +
                                               " atoms exceeds the oracle budget of " +
                                               std::to_string(budget.max_subset_universe));
}

std::vector<AtomSet> all_subsets(const AtomSet& universe) {
  const std::vector<GroundAtom> atoms(universe.begin(), universe.end());
  std::vector<AtomSet> out;
  out.reserve(std::size_t(1) << atoms.size());
  for (std::size_t mask = 0; mask < (std::size_t(1) << atoms.size()); ++mask) {
    AtomSet subset;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask & (std::size_t(1) << i)) subset.insert(atoms[i]);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

bool satisfies_all(const Instance& db, const std::vector<DenialConstraint>& dcs) {
  return std::none_of(dcs.begin(), dcs.end(), [&](const DenialConstraint& dc) {
    return evaluate_bcq(db, violation_view(dc));
  });
}

}  // namespace

CauseSet brute_causes(const Instance& db, const ConjunctiveQuery& query, OracleBudget budget) {
  check_budget(db.endogenous().size(), budget);
  CauseSet out;
  out.query = query;
  out.instance_id = db.snapshot_id();
  if (!evaluate_bcq(db, query)) return out;

  for (const auto& tuple : db.endogenous()) {
    AtomSet rest = db.endogenous();
    rest.erase(tuple);
    std::vector<AtomSet> valid;
    for (const auto& gamma : all_subsets(rest)) {
      if (!evaluate_bcq(delete_atoms(db, gamma), query)) continue;
      if (evaluate_bcq(delete_atoms(db, set_union(gamma, {tuple})), query)) continue;
      valid.push_back(gamma);
    }
    if (valid.empty()) continue;
    const std::vector<AtomSet> minimal = minimal_sets(valid);
    std::size_t smallest = minimal.front().size();
    for (const auto& gamma : minimal) smallest = std::min(smallest, gamma.size());
    out.reports.push_back(CauseReport{tuple, AtomSetFamily(minimal.begin(), minimal.end()),
                                      Rational::reciprocal_of(static_cast<std::int64_t>(smallest) + 1)});
  }
  std::sort(out.reports.begin(), out.reports.end(),
            [](const CauseReport& a, const CauseReport& b) { return a.cause < b.cause; });
  return out;
}

RepairSet brute_s_repairs(const Instance& db, const std::vector<DenialConstraint>& dcs,
                          OracleBudget budget) {
  check_budget(db.size(), budget);
  std::vector<AtomSet> consistent_deletions;
  for (const auto& removed : all_subsets(db.atoms())) {
    if (satisfies_all(delete_atoms(db, removed), dcs)) consistent_deletions.push_back(removed);
  }
  RepairSet out;
  out.kind = RepairKind::Subset;
  for (const auto& deletion : minimal_sets(consistent_deletions)) {
    out.repairs.push_back(Repair{delete_atoms(db, deletion), deletion});
  }
  std::sort(out.repairs.begin(), out.repairs.end(),
            [](const Repair& a, const Repair& b) { return a.deleted < b.deleted; });
  return out;
}

RepairSet brute_c_repairs(const Instance& db, const std::vector<DenialConstraint>& dcs,
                          OracleBudget budget) {
  RepairSet all = brute_s_repairs(db, dcs, budget);
  std::size_t smallest = db.size() + 1;
  for (const auto& repair : all.repairs) smallest = std::min(smallest, repair.deleted.size());
  RepairSet out;
  out.kind = RepairKind::Cardinality;
  for (auto& repair : all.repairs) {
    if (repair.deleted.size() == smallest) out.repairs.push_back(std::move(repair));
  }
  return out;
}

std::vector<Diagnosis> brute_min_diagnoses(const Instance& db, const ConjunctiveQuery& query,
                                           OracleBudget budget) {
  check_budget(db.endogenous().size(), budget);
  if (!evaluate_bcq(db, query))
    throw Error(ErrorKind::ObservationAbsent, "the query does not hold, there is nothing to diagnose");
  std::vector<AtomSet> diagnoses;
  for (const auto& delta : all_subsets(db.endogenous())) {
    if (!evaluate_bcq(delete_atoms(db, delta), query)) diagnoses.push_back(delta);
  }
  std::vector<Diagnosis> out;
  for (auto& delta : minimal_sets(diagnoses)) out.push_back(Diagnosis{std::move(delta)});
  return out;
}

}  // namespace oracle
}  // namespace causerep
