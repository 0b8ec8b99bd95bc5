#include "causerep/causality.hpp"

#include <algorithm>

#include "causerep/repairs.hpp"

namespace causerep {

namespace {

void require_endogenous(const Instance& db, const GroundAtom& tuple) {
  if (!db.contains(tuple)) throw Error(ErrorKind::NotInInstance, tuple.str() + " is not in the instance");
  if (!db.is_endogenous(tuple)) throw Error(ErrorKind::NotEndogenous, tuple.str() + " is exogenous");
}

// Minimal hitting sets of the query's minimal witness images, restricted to
// the endogenous part. An image with no endogenous tuple cannot be hit, and
// then the query cannot be falsified by admissible deletions at all.
std::vector<AtomSet> endogenous_falsifiers(const Instance& db, const ConjunctiveQuery& query,
                                           SearchBudget* budget) {
  const std::vector<AtomSet> images = minimal_witness_images(db, query, budget);
  if (images.empty()) return {};
  std::vector<AtomSet> restricted;
  restricted.reserve(images.size());
  for (const auto& image : images) {
    AtomSet endo_part = set_intersection(image, db.endogenous());
    if (endo_part.empty()) return {};
    restricted.push_back(std::move(endo_part));
  }
  return minimal_hitting_sets(minimal_sets(restricted), budget);
}

}  // namespace

bool is_counterfactual_cause(const Instance& db, const ConjunctiveQuery& query, const GroundAtom& tuple,
                             SearchBudget* budget) {
  require_endogenous(db, tuple);
  if (!evaluate_bcq(db, query, budget)) return false;
  return !evaluate_bcq(delete_atoms(db, {tuple}), query, budget);
}

bool is_actual_cause(const Instance& db, const ConjunctiveQuery& query, const GroundAtom& tuple,
                     SearchBudget* budget) {
  require_endogenous(db, tuple);
  return !minimal_contingency_sets(db, query, tuple, budget).empty();
}

AtomSetFamily minimal_contingency_sets(const Instance& db, const ConjunctiveQuery& query,
                                       const GroundAtom& tuple, SearchBudget* budget) {
  require_endogenous(db, tuple);
  AtomSetFamily out;
  for (const auto& hs : endogenous_falsifiers(db, query, budget)) {
    if (hs.count(tuple)) out.insert(set_difference(hs, {tuple}));
  }
  return out;
}

Rational responsibility(const Instance& db, const ConjunctiveQuery& query, const GroundAtom& tuple,
                        SearchBudget* budget) {
  require_endogenous(db, tuple);
  if (!evaluate_bcq(db, query, budget))
    throw Error(ErrorKind::QueryNotSatisfied, "the query does not hold, responsibility is undefined");
  const AtomSetFamily contingencies = minimal_contingency_sets(db, query, tuple, budget);
  if (contingencies.empty()) return Rational::zero();
  std::size_t smallest = contingencies.begin()->size();
  for (const auto& gamma : contingencies) smallest = std::min(smallest, gamma.size());
  return Rational::reciprocal_of(static_cast<std::int64_t>(smallest) + 1);
}

CauseSet actual_causes(const Instance& db, const ConjunctiveQuery& query, SearchBudget* budget) {
  CauseSet out;
  out.query = query;
  out.instance_id = db.snapshot_id();
  std::map<GroundAtom, AtomSetFamily> by_cause;
  for (const auto& hs : endogenous_falsifiers(db, query, budget)) {
    for (const auto& tuple : hs) by_cause[tuple].insert(set_difference(hs, {tuple}));
  }
  for (auto& [tuple, contingencies] : by_cause) {
    std::size_t smallest = contingencies.begin()->size();
    for (const auto& gamma : contingencies) smallest = std::min(smallest, gamma.size());
    out.reports.push_back(CauseReport{tuple, std::move(contingencies),
                                      Rational::reciprocal_of(static_cast<std::int64_t>(smallest) + 1)});
  }
  std::sort(out.reports.begin(), out.reports.end(),
            [](const CauseReport& a, const CauseReport& b) { return a.cause < b.cause; });
  return out;
}

AtomSet most_responsible_causes(const Instance& db, const ConjunctiveQuery& query, SearchBudget* budget) {
  const CauseSet causes = actual_causes(db, query, budget);
  Rational best = Rational::zero();
  for (const auto& report : causes.reports) best = std::max(best, report.responsibility);
  AtomSet out;
  for (const auto& report : causes.reports) {
    if (report.responsibility == best) out.insert(report.cause);
  }
  return out;
}

}  // namespace causerep
