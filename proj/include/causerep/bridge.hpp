#pragma once

#include "causerep/query.hpp"
#include "causerep/reports.hpp"

namespace causerep {

// The reductions between causes and repairs, in both directions. Each
// operation recomputes from its own side of the reduction so that the
// equivalence checks against the direct engines stay meaningful.

// DF(D, D^n, kappa, t): deletion sets of S-repairs that contain t and stay
// inside the endogenous part.
DFCollection df_sets(const Instance& db, const DenialConstraint& dc, const GroundAtom& tuple,
                     SearchBudget* budget = nullptr);

// Causes recovered purely from S-repairs: t is a cause iff DF(t) is
// nonempty; contingency sets are s minus {t}, responsibility 1/min|s|.
CauseSet causes_from_repairs(const Instance& db, const ConjunctiveQuery& query,
                             SearchBudget* budget = nullptr);

// The cause bundles per violation view over an all-endogenous instance,
// the input format of repairs_from_causes.
CausePackage make_cause_package(const Instance& db, const std::vector<DenialConstraint>& dcs,
                                SearchBudget* budget = nullptr);

// Builds Srep(D, Sigma) from the cause package alone: one cause-with-
// contingency choice per violated view, unioned across views, deduplicated
// and filtered to subset-minimal deletion sets. Choices range over every
// cause of a view, i.e. over every hitting set of the per-view cause sets,
// not only the subset-minimal hitting sets; restricting to minimal hitting
// sets loses repairs when a single cause covers all views.
RepairSet repairs_from_causes(const Instance& db, const std::vector<DenialConstraint>& dcs,
                              const CausePackage& package, SearchBudget* budget = nullptr);

// C-repairs from the most responsible causes and their smallest contingency sets.
RepairSet c_repairs_from_mrc(const Instance& db, const DenialConstraint& dc, SearchBudget* budget = nullptr);

// A ground atom is consistently true under S-repair semantics iff it is not
// an actual cause for the violation view.
bool cqa_from_causes(const Instance& db, const DenialConstraint& dc, const GroundAtom& atom,
                     SearchBudget* budget = nullptr);

}  // namespace causerep
