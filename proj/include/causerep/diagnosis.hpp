#pragma once

#include <string>
#include <vector>

#include "causerep/query.hpp"
#include "causerep/reports.hpp"

namespace causerep {

// Textual first-order system description for display (`diagnose --show-sd`).
// The decision procedure never consumes it; consistency of SD plus an
// abnormality set is decided by model checking the finite instance.
struct SystemDescription {
  std::vector<std::string> completion_axioms;
  std::string unique_names;
  std::string constraint_ext;  // kappa(Q) with one "not ab" conjunct per query atom
  std::vector<std::string> inclusion_dependencies;
  std::vector<std::string> normality_defaults;

  std::string render() const;
};

struct DiagnosisProblem {
  Instance instance;
  ConjunctiveQuery query;  // the observation: query is (unexpectedly) true
  SystemDescription system_description;
};

// Requires the observation to actually hold; otherwise there is nothing to
// diagnose and ObservationAbsent is thrown.
DiagnosisProblem build_diagnosis_problem(const Instance& db, const ConjunctiveQuery& query,
                                         SearchBudget* budget = nullptr);

// Delta is a diagnosis iff flagging it abnormal restores consistency, which
// for the completed finite theory means (D minus Delta) no longer satisfies
// the query.
bool is_diagnosis(const DiagnosisProblem& problem, const AtomSet& abnormal, SearchBudget* budget = nullptr);

std::vector<Diagnosis> minimal_diagnoses(const DiagnosisProblem& problem, SearchBudget* budget = nullptr);

// D(M, t): subset-minimal diagnoses containing t.
std::vector<Diagnosis> diagnoses_containing(const DiagnosisProblem& problem, const GroundAtom& tuple,
                                            SearchBudget* budget = nullptr);

// MCD(M, t): the members of D(M, t) of minimum cardinality. Minimizing
// inside D(M, t) is what keeps 1/|s| equal to the responsibility of t; an
// unrelated small diagnosis padded with t would otherwise win the minimum.
std::vector<Diagnosis> mcd(const DiagnosisProblem& problem, const GroundAtom& tuple,
                           SearchBudget* budget = nullptr);

// Causes recovered from diagnoses: t is a cause iff D(M, t) is nonempty,
// contingency sets are Delta minus {t}, responsibility is 1/|s| for
// s in MCD(M, t).
CauseSet causes_from_diagnoses(const DiagnosisProblem& problem, SearchBudget* budget = nullptr);

}  // namespace causerep
