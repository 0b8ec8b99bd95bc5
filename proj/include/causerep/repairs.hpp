#pragma once

#include <vector>

#include "causerep/query.hpp"
#include "causerep/reports.hpp"

namespace causerep {

// Tuples as vertices, inclusion-minimal violation sets as hyperedges. Edges
// minimal for one constraint but containing another constraint's violation
// are pruned, so the edge set is an antichain.
struct ConflictHypergraph {
  AtomSet vertices;
  std::vector<AtomSet> edges;
};

ConflictHypergraph conflict_hypergraph(const Instance& db, const std::vector<DenialConstraint>& dcs,
                                       SearchBudget* budget = nullptr);

bool is_consistent(const Instance& db, const std::vector<DenialConstraint>& dcs,
                   SearchBudget* budget = nullptr);

// All inclusion-minimal sets intersecting every member of `collection`.
// The empty collection has the empty hitting set; a collection with an empty
// member has none. Branches on the smallest uncovered edge in canonical
// order, prunes duplicates via forbidden vertices, and keeps an antichain
// store of results.
std::vector<AtomSet> minimal_hitting_sets(const std::vector<AtomSet>& collection,
                                          SearchBudget* budget = nullptr);

RepairSet s_repairs(const Instance& db, const std::vector<DenialConstraint>& dcs,
                    SearchBudget* budget = nullptr);

RepairSet c_repairs(const Instance& db, const std::vector<DenialConstraint>& dcs,
                    SearchBudget* budget = nullptr);

enum class RepairSemantics { Subset, Cardinality };

// True iff the ground atom survives in every repair under the chosen
// semantics; atoms outside D are trivially not consistent answers.
bool consistent_answer_ground(const Instance& db, const std::vector<DenialConstraint>& dcs,
                              const GroundAtom& atom, RepairSemantics semantics,
                              SearchBudget* budget = nullptr);

}  // namespace causerep
