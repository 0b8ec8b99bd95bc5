#pragma once

#include "causerep/query.hpp"
#include "causerep/reports.hpp"

namespace causerep {

// Direct, definition-level computation of causes. Contingency reasoning is
// reduced to hitting sets over the minimal witness images of the query: the
// minimal hitting sets restricted to endogenous tuples are exactly the sets
// Gamma u {t} with Gamma an S-minimal contingency set for t.

bool is_counterfactual_cause(const Instance& db, const ConjunctiveQuery& query, const GroundAtom& tuple,
                             SearchBudget* budget = nullptr);

bool is_actual_cause(const Instance& db, const ConjunctiveQuery& query, const GroundAtom& tuple,
                     SearchBudget* budget = nullptr);

// All S-minimal contingency sets for `tuple`; empty iff it is not an actual cause.
AtomSetFamily minimal_contingency_sets(const Instance& db, const ConjunctiveQuery& query,
                                       const GroundAtom& tuple, SearchBudget* budget = nullptr);

// 1/(1+k) for the smallest contingency set, 0 for non-causes. Requires the
// query to hold in the instance.
Rational responsibility(const Instance& db, const ConjunctiveQuery& query, const GroundAtom& tuple,
                        SearchBudget* budget = nullptr);

CauseSet actual_causes(const Instance& db, const ConjunctiveQuery& query, SearchBudget* budget = nullptr);

// Argmax-by-responsibility subset of the actual causes.
AtomSet most_responsible_causes(const Instance& db, const ConjunctiveQuery& query,
                                SearchBudget* budget = nullptr);

}  // namespace causerep
