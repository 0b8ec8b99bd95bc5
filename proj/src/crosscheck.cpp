#include "causerep/crosscheck.hpp"

#include <algorithm>

#include "causerep/bridge.hpp"
#include "causerep/causality.hpp"
#include "causerep/diagnosis.hpp"
#include "causerep/repairs.hpp"

namespace causerep {

namespace {

std::string render_family(const std::vector<AtomSet>& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(family[i]);
  }
  return out + "}";
}

std::string render_reports(const CauseSet& causes) {
  std::string out = "{";
  bool first = true;
  for (const auto& r : causes.reports) {
    if (!first) out += ", ";
    first = false;
    out += r.cause.str() + " rho=" + r.responsibility.str() + " CT=";
    out += render_family(std::vector<AtomSet>(r.minimal_contingencies.begin(), r.minimal_contingencies.end()));
  }
  return out + "}";
}

CheckResult compare_cause_sets(const std::string& name, const CauseSet& got, const CauseSet& want) {
  CheckResult result{name};
  if (!got.same_reports(want)) {
    result.pass = false;
    result.detail = "computed " + render_reports(got) + " but the oracle gives " + render_reports(want);
  }
  return result;
}

CheckResult compare_deletions(const std::string& name, const RepairSet& got, const RepairSet& want) {
  CheckResult result{name};
  if (!got.same_deletions(want)) {
    result.pass = false;
    result.detail = "computed deletions " + render_family(got.deletions()) + " but the oracle gives " +
                    render_family(want.deletions());
  }
  return result;
}

CheckResult skipped(const std::string& name, const std::string& why) {
  CheckResult result{name};
  result.applicable = false;
  result.detail = why;
  return result;
}

}  // namespace

CheckResult check_repairs_from_causes(const Instance& db, const std::vector<DenialConstraint>& dcs,
                                      const CausePackage& package, oracle::OracleBudget oracle_budget,
                                      SearchBudget* budget) {
  const std::string name = "repairs-from-causes equivalence";
  try {
    return compare_deletions(name, repairs_from_causes(db, dcs, package, budget),
                             oracle::brute_s_repairs(db, dcs, oracle_budget));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::ResourceExceeded) throw;
    CheckResult result{name};
    result.pass = false;
    result.detail = e.what();
    return result;
  }
}

CrosscheckReport crosscheck(const Instance& db, const std::optional<ConjunctiveQuery>& query,
                            const std::vector<DenialConstraint>& dcs,
                            oracle::OracleBudget oracle_budget, SearchBudget* budget) {
  CrosscheckReport report;

  std::vector<DenialConstraint> effective = dcs;
  if (effective.empty() && query) effective.push_back(dc_of_query(*query));

  if (query) {
    report.checks.push_back(compare_cause_sets("causes-from-repairs equivalence",
                                               causes_from_repairs(db, *query, budget),
                                               oracle::brute_causes(db, *query, oracle_budget)));
    if (evaluate_bcq(db, *query, budget)) {
      const DiagnosisProblem problem = build_diagnosis_problem(db, *query, budget);
      report.checks.push_back(compare_cause_sets("causes-from-diagnoses equivalence",
                                                 causes_from_diagnoses(problem, budget),
                                                 oracle::brute_causes(db, *query, oracle_budget)));
      {
        CheckResult result{"minimal diagnoses match oracle"};
        std::vector<AtomSet> got;
        for (const auto& d : minimal_diagnoses(problem, budget)) got.push_back(d.abnormal);
        std::vector<AtomSet> want;
        for (const auto& d : oracle::brute_min_diagnoses(db, *query, oracle_budget)) want.push_back(d.abnormal);
        if (got != want) {
          result.pass = false;
          result.detail = "computed " + render_family(got) + " but the oracle gives " + render_family(want);
        }
        report.checks.push_back(result);
      }
    } else {
      report.checks.push_back(skipped("causes-from-diagnoses equivalence", "the query does not hold"));
    }
  } else {
    report.checks.push_back(skipped("causes-from-repairs equivalence", "no query given"));
    report.checks.push_back(skipped("causes-from-diagnoses equivalence", "no query given"));
  }

  if (effective.empty()) {
    report.checks.push_back(skipped("consistency-iff-no-causes", "no constraints given"));
    report.checks.push_back(skipped("repairs-from-causes equivalence", "no constraints given"));
    report.checks.push_back(skipped("c-repairs-from-most-responsible equivalence", "no constraints given"));
    report.checks.push_back(skipped("cqa-from-causes equivalence", "no constraints given"));
    report.checks.push_back(skipped("hitting-set duality", "no constraints given"));
    return report;
  }

  {
    CheckResult result{"consistency-iff-no-causes"};
    for (const auto& dc : effective) {
      const bool consistent = is_consistent(db, {dc}, budget);
      const bool no_causes = actual_causes(db.all_endogenous(), violation_view(dc), budget).reports.empty();
      if (consistent != no_causes) {
        result.pass = false;
        result.detail = dc.str() + ": consistent=" + (consistent ? "true" : "false") +
                        " but causes " + (no_causes ? "absent" : "present");
        break;
      }
    }
    report.checks.push_back(result);
  }

  if (db.exogenous().empty()) {
    report.checks.push_back(check_repairs_from_causes(
        db, effective, make_cause_package(db, effective, budget), oracle_budget, budget));
  } else {
    report.checks.push_back(
        skipped("repairs-from-causes equivalence", "defined for fully endogenous instances only"));
  }

  {
    CheckResult result{"c-repairs-from-most-responsible equivalence"};
    for (const auto& dc : effective) {
      const CheckResult one = compare_deletions(result.name, c_repairs_from_mrc(db, dc, budget),
                                                oracle::brute_c_repairs(db, {dc}, oracle_budget));
      if (!one.pass) {
        result.pass = false;
        result.detail = dc.str() + ": " + one.detail;
        break;
      }
    }
    report.checks.push_back(result);
  }

  {
    CheckResult result{"cqa-from-causes equivalence"};
    for (const auto& dc : effective) {
      const RepairSet srep = oracle::brute_s_repairs(db, {dc}, oracle_budget);
      for (const auto& atom : db.atoms()) {
        const bool via_causes = cqa_from_causes(db, dc, atom, budget);
        bool in_every_repair = true;
        for (const auto& repair : srep.repairs) {
          if (repair.deleted.count(atom)) {
            in_every_repair = false;
            break;
          }
        }
        if (via_causes != in_every_repair) {
          result.pass = false;
          result.detail = dc.str() + ", " + atom.str() + ": cause route says " +
                          (via_causes ? "consistently true" : "not consistently true") +
                          " but repairs say the opposite";
          break;
        }
      }
      if (!result.pass) break;
    }
    report.checks.push_back(result);
  }

  {
    CheckResult result{"hitting-set duality"};
    const ConflictHypergraph graph = conflict_hypergraph(db, effective, budget);
    const std::vector<AtomSet> hs = minimal_hitting_sets(graph.edges, budget);
    const std::vector<AtomSet> brute = oracle::brute_s_repairs(db, effective, oracle_budget).deletions();
    if (hs != brute) {
      result.pass = false;
      result.detail = "minimal hitting sets " + render_family(hs) + " but oracle repair deletions " +
                      render_family(brute);
    }
    report.checks.push_back(result);
  }

  return report;
}

}  // namespace causerep
