#include "causerep/repairs.hpp"

#include <algorithm>
#include <limits>

namespace causerep {

ConflictHypergraph conflict_hypergraph(const Instance& db, const std::vector<DenialConstraint>& dcs,
                                       SearchBudget* budget) {
  std::set<AtomSet> pooled;
  for (const auto& dc : dcs) {
    for (auto& image : minimal_witness_images(db, violation_view(dc), budget)) pooled.insert(std::move(image));
  }
  ConflictHypergraph graph;
  graph.vertices = db.atoms();
  graph.edges = minimal_sets(std::vector<AtomSet>(pooled.begin(), pooled.end()));
  return graph;
}

bool is_consistent(const Instance& db, const std::vector<DenialConstraint>& dcs, SearchBudget* budget) {
  for (const auto& dc : dcs) {
    if (evaluate_bcq(db, violation_view(dc), budget)) return false;
  }
  return true;
}

namespace {

struct HittingSetSearch {
  const std::vector<AtomSet>* edges;
  SearchBudget* budget;
  std::vector<AtomSet> found;

  void run() {
    AtomSet partial;
    AtomSet forbidden;
    std::vector<std::size_t> uncovered(edges->size());
    for (std::size_t i = 0; i < uncovered.size(); ++i) uncovered[i] = i;
    recurse(partial, forbidden, uncovered);
    // Branching can emit supersets of sets found down other branches; keep
    // the antichain only.
    found = minimal_sets(found);
  }

  void recurse(AtomSet& partial, AtomSet forbidden, const std::vector<std::size_t>& uncovered) {
    if (budget) budget->tick();
    if (uncovered.empty()) {
      found.push_back(partial);
      return;
    }
    // Fewest remaining candidates first, canonical edge order as tiebreak.
    std::size_t pick = uncovered.front();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t idx : uncovered) {
      const std::size_t n = set_difference((*edges)[idx], forbidden).size();
      if (n < best || (n == best && (*edges)[idx] < (*edges)[pick])) {
        best = n;
        pick = idx;
      }
    }
    const AtomSet candidates = set_difference((*edges)[pick], forbidden);
    for (const auto& vertex : candidates) {
      partial.insert(vertex);
      std::vector<std::size_t> still;
      for (std::size_t idx : uncovered) {
        if (!(*edges)[idx].count(vertex)) still.push_back(idx);
      }
      recurse(partial, forbidden, still);
      partial.erase(vertex);
      // Later branches must not reuse this vertex or they would regenerate
      // the same hitting sets.
      forbidden.insert(vertex);
    }
  }
};

}  // namespace

std::vector<AtomSet> minimal_hitting_sets(const std::vector<AtomSet>& collection, SearchBudget* budget) {
  if (collection.empty()) return {AtomSet{}};
  for (const auto& member : collection) {
    if (member.empty()) return {};
  }
  HittingSetSearch search;
  search.edges = &collection;
  search.budget = budget;
  search.run();
  return search.found;
}

RepairSet s_repairs(const Instance& db, const std::vector<DenialConstraint>& dcs, SearchBudget* budget) {
  RepairSet out;
  out.kind = RepairKind::Subset;
  const ConflictHypergraph graph = conflict_hypergraph(db, dcs, budget);
  if (graph.edges.empty()) {
    out.repairs.push_back(Repair{db, {}});
    return out;
  }
  for (const auto& hs : minimal_hitting_sets(graph.edges, budget)) {
    out.repairs.push_back(Repair{delete_atoms(db, hs), hs});
  }
  std::sort(out.repairs.begin(), out.repairs.end(),
            [](const Repair& a, const Repair& b) { return a.deleted < b.deleted; });
  return out;
}

RepairSet c_repairs(const Instance& db, const std::vector<DenialConstraint>& dcs, SearchBudget* budget) {
  RepairSet all = s_repairs(db, dcs, budget);
  std::size_t min_size = std::numeric_limits<std::size_t>::max();
  for (const auto& repair : all.repairs) min_size = std::min(min_size, repair.deleted.size());
  RepairSet out;
  out.kind = RepairKind::Cardinality;
  for (auto& repair : all.repairs) {
    if (repair.deleted.size() == min_size) out.repairs.push_back(std::move(repair));
  }
  return out;
}

bool consistent_answer_ground(const Instance& db, const std::vector<DenialConstraint>& dcs,
                              const GroundAtom& atom, RepairSemantics semantics, SearchBudget* budget) {
  if (!db.contains(atom)) return false;
  const RepairSet repairs =
      semantics == RepairSemantics::Subset ? s_repairs(db, dcs, budget) : c_repairs(db, dcs, budget);
  for (const auto& repair : repairs.repairs) {
    if (repair.deleted.count(atom)) return false;
  }
  return true;
}

}  // namespace causerep
