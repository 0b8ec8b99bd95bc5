#include "causerep/bridge.hpp"

#include <algorithm>
#include <limits>

#include "causerep/causality.hpp"
#include "causerep/repairs.hpp"

namespace causerep {

DFCollection df_sets(const Instance& db, const DenialConstraint& dc, const GroundAtom& tuple,
                     SearchBudget* budget) {
  if (!db.contains(tuple)) throw Error(ErrorKind::NotInInstance, tuple.str() + " is not in the instance");
  if (!db.is_endogenous(tuple)) throw Error(ErrorKind::NotEndogenous, tuple.str() + " is exogenous");
  DFCollection out;
  out.tuple = tuple;
  for (const auto& repair : s_repairs(db, {dc}, budget).repairs) {
    if (repair.deleted.count(tuple) && is_subset(repair.deleted, db.endogenous())) {
      out.difference_sets.insert(repair.deleted);
    }
  }
  return out;
}

CauseSet causes_from_repairs(const Instance& db, const ConjunctiveQuery& query, SearchBudget* budget) {
  CauseSet out;
  out.query = query;
  out.instance_id = db.snapshot_id();
  const DenialConstraint dc = dc_of_query(query);
  if (is_consistent(db, {dc}, budget)) return out;  // no repair differs from D

  const RepairSet srep = s_repairs(db, {dc}, budget);
  std::map<GroundAtom, AtomSetFamily> df_by_tuple;
  for (const auto& repair : srep.repairs) {
    if (!is_subset(repair.deleted, db.endogenous())) continue;
    for (const auto& tuple : repair.deleted) df_by_tuple[tuple].insert(repair.deleted);
  }
  for (auto& [tuple, difference_sets] : df_by_tuple) {
    AtomSetFamily contingencies;
    std::size_t smallest = std::numeric_limits<std::size_t>::max();
    for (const auto& s : difference_sets) {
      smallest = std::min(smallest, s.size());
      contingencies.insert(set_difference(s, {tuple}));
    }
    out.reports.push_back(CauseReport{tuple, std::move(contingencies),
                                      Rational::reciprocal_of(static_cast<std::int64_t>(smallest))});
  }
  std::sort(out.reports.begin(), out.reports.end(),
            [](const CauseReport& a, const CauseReport& b) { return a.cause < b.cause; });
  return out;
}

CausePackage make_cause_package(const Instance& db, const std::vector<DenialConstraint>& dcs,
                                SearchBudget* budget) {
  const Instance flat = db.all_endogenous();
  CausePackage package;
  for (const auto& dc : dcs) {
    std::vector<CauseEntry> entries;
    for (const auto& report : actual_causes(flat, violation_view(dc), budget).reports) {
      entries.push_back(CauseEntry{report.cause, report.minimal_contingencies});
    }
    package.per_view.emplace_back(dc, std::move(entries));
  }
  return package;
}

namespace {

void validate_package(const Instance& db, const std::vector<DenialConstraint>& dcs,
                      const CausePackage& package, SearchBudget* budget) {
  std::set<DenialConstraint> wanted(dcs.begin(), dcs.end());
  std::set<DenialConstraint> given;
  for (const auto& [dc, entries] : package.per_view) given.insert(dc);
  if (wanted != given)
    throw Error(ErrorKind::InconsistentPackage,
                "package views do not match the given constraint set");
  for (const auto& [dc, entries] : package.per_view) {
    const ConjunctiveQuery view = violation_view(dc);
    for (const auto& entry : entries) {
      if (!db.contains(entry.tuple))
        throw Error(ErrorKind::InconsistentPackage, entry.tuple.str() + " is not in the instance");
      for (const auto& contingency : entry.contingencies) {
        for (const auto& atom : contingency) {
          if (!db.contains(atom))
            throw Error(ErrorKind::InconsistentPackage, atom.str() + " (contingency) is not in the instance");
        }
        if (contingency.count(entry.tuple))
          throw Error(ErrorKind::InconsistentPackage,
                      entry.tuple.str() + " occurs inside one of its own contingency sets");
        // The two counterfactual conditions, checked literally.
        if (!evaluate_bcq(delete_atoms(db, contingency), view, budget))
          throw Error(ErrorKind::InconsistentPackage,
                      "view already false after removing a contingency set for " + entry.tuple.str());
        if (evaluate_bcq(delete_atoms(db, set_union(contingency, {entry.tuple})), view, budget))
          throw Error(ErrorKind::InconsistentPackage,
                      entry.tuple.str() + " is not counterfactual under one of its contingency sets");
      }
    }
  }
}

}  // namespace

RepairSet repairs_from_causes(const Instance& db, const std::vector<DenialConstraint>& dcs,
                              const CausePackage& package, SearchBudget* budget) {
  if (!db.exogenous().empty())
    throw Error(ErrorKind::PartitionedInstance,
                "repairs-from-causes is defined for fully endogenous instances");
  validate_package(db, dcs, package, budget);

  // Per violated view, the candidate deletion blocks {t} u C(t).
  std::vector<std::vector<AtomSet>> options;
  for (const auto& [dc, entries] : package.per_view) {
    if (!evaluate_bcq(db, violation_view(dc), budget)) continue;
    std::vector<AtomSet> blocks;
    for (const auto& entry : entries) {
      for (const auto& contingency : entry.contingencies) {
        blocks.push_back(set_union(contingency, {entry.tuple}));
      }
    }
    if (blocks.empty())
      throw Error(ErrorKind::InconsistentPackage, "violated constraint has no cause entry: " + dc.str());
    options.push_back(std::move(blocks));
  }

  RepairSet out;
  out.kind = RepairKind::Subset;
  if (options.empty()) {
    out.repairs.push_back(Repair{db, {}});
    return out;
  }

  std::set<AtomSet> produced;
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    if (budget) budget->tick();
    AtomSet deletion;
    for (std::size_t i = 0; i < options.size(); ++i) {
      const AtomSet& block = options[i][choice[i]];
      deletion.insert(block.begin(), block.end());
    }
    produced.insert(std::move(deletion));
    std::size_t level = 0;
    while (level < options.size() && ++choice[level] == options[level].size()) {
      choice[level] = 0;
      ++level;
    }
    if (level == options.size()) break;
  }

  for (const auto& deletion : minimal_sets(std::vector<AtomSet>(produced.begin(), produced.end()))) {
    out.repairs.push_back(Repair{delete_atoms(db, deletion), deletion});
  }
  std::sort(out.repairs.begin(), out.repairs.end(),
            [](const Repair& a, const Repair& b) { return a.deleted < b.deleted; });
  return out;
}

RepairSet c_repairs_from_mrc(const Instance& db, const DenialConstraint& dc, SearchBudget* budget) {
  RepairSet out;
  out.kind = RepairKind::Cardinality;
  if (is_consistent(db, {dc}, budget)) {
    out.repairs.push_back(Repair{db, {}});
    return out;
  }
  const Instance flat = db.all_endogenous();
  const ConjunctiveQuery view = violation_view(dc);
  const CauseSet causes = actual_causes(flat, view, budget);
  Rational best = Rational::zero();
  for (const auto& report : causes.reports) best = std::max(best, report.responsibility);

  std::set<AtomSet> deletions;
  for (const auto& report : causes.reports) {
    if (!(report.responsibility == best)) continue;
    std::size_t smallest = std::numeric_limits<std::size_t>::max();
    for (const auto& gamma : report.minimal_contingencies) smallest = std::min(smallest, gamma.size());
    for (const auto& gamma : report.minimal_contingencies) {
      if (gamma.size() == smallest) deletions.insert(set_union(gamma, {report.cause}));
    }
  }
  for (const auto& deletion : deletions) {
    out.repairs.push_back(Repair{delete_atoms(db, deletion), deletion});
  }
  return out;
}

bool cqa_from_causes(const Instance& db, const DenialConstraint& dc, const GroundAtom& atom,
                     SearchBudget* budget) {
  if (!db.contains(atom)) return false;
  const CauseSet causes = actual_causes(db.all_endogenous(), violation_view(dc), budget);
  return !causes.contains(atom);
}

}  // namespace causerep
