#include "causerep/diagnosis.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "causerep/repairs.hpp"

namespace causerep {

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// x, y, z for small arities, x1..xn beyond that.
std::vector<std::string> axiom_vars(std::size_t arity) {
  static const char* names[] = {"x", "y", "z"};
  std::vector<std::string> out;
  if (arity <= 3) {
    for (std::size_t i = 0; i < arity; ++i) out.emplace_back(names[i]);
  } else {
    for (std::size_t i = 0; i < arity; ++i) out.push_back("x" + std::to_string(i + 1));
  }
  return out;
}

std::string joined_vars(const std::vector<std::string>& vars) {
  std::string out;
  for (const auto& v : vars) out += v;
  return out;
}

std::string arg_list(const std::vector<std::string>& vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += ",";
    out += vars[i];
  }
  return out + ")";
}

std::string completion_axiom(const PredicateSig& sig, const std::vector<GroundAtom>& tuples) {
  const auto vars = axiom_vars(sig.arity);
  std::string out = "∀" + joined_vars(vars) + "(" + sig.name + arg_list(vars) + " ↔ ";
  const bool parenthesize = sig.arity > 1 && tuples.size() > 1;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i > 0) out += " ∨ ";
    std::string disjunct;
    for (std::size_t j = 0; j < sig.arity; ++j) {
      if (j > 0) disjunct += " ∧ ";
      disjunct += vars[j] + " = " + tuples[i].args[j].symbol;
    }
    out += parenthesize ? "(" + disjunct + ")" : disjunct;
  }
  return out + ")";
}

std::string extended_constraint(const ConjunctiveQuery& query) {
  // Variables are displayed lowercase, following the usual logic notation.
  const std::vector<std::string> vars = query.variables();
  std::string out;
  if (!vars.empty()) {
    out = "∀";
    for (const auto& name : vars) out += lower(name);
  }
  out += "¬(";
  for (std::size_t i = 0; i < query.atoms.size(); ++i) {
    if (i > 0) out += " ∧ ";
    const QueryAtom& atom = query.atoms[i];
    std::string args = "(";
    for (std::size_t j = 0; j < atom.args.size(); ++j) {
      if (j > 0) args += ",";
      if (const auto* var = std::get_if<Variable>(&atom.args[j])) {
        args += lower(var->name);
      } else {
        args += std::get<Constant>(atom.args[j]).symbol;
      }
    }
    args += ")";
    out += atom.predicate + args + " ∧ ¬ab_" + atom.predicate + args;
  }
  return out + ")";
}

SystemDescription build_sd(const Instance& db, const ConjunctiveQuery& query) {
  SystemDescription sd;

  std::map<std::string, std::vector<GroundAtom>> by_predicate;
  for (const auto& atom : db.atoms()) by_predicate[atom.predicate].push_back(atom);
  for (const auto& [name, tuples] : by_predicate) {
    sd.completion_axioms.push_back(completion_axiom({name, tuples.front().arity()}, tuples));
  }

  std::set<std::string> constants;
  for (const auto& atom : db.atoms()) {
    for (const auto& c : atom.args) constants.insert(c.symbol);
  }
  std::vector<std::string> ordered(constants.begin(), constants.end());
  std::string unique;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      if (!unique.empty()) unique += ", ";
      unique += ordered[i] + " ≠ " + ordered[j];
    }
  }
  sd.unique_names = unique;

  sd.constraint_ext = extended_constraint(query);

  for (const auto& [name, tuples] : by_predicate) {
    const auto vars = axiom_vars(tuples.front().arity());
    const std::string head = "ab_" + name + arg_list(vars);
    const std::string quant = "∀" + joined_vars(vars);
    sd.inclusion_dependencies.push_back(quant + "(" + head + " → " + name + arg_list(vars) + ")");
    sd.normality_defaults.push_back(quant + "(" + head + " → false)");
  }
  return sd;
}

void require_endogenous_subset(const Instance& db, const AtomSet& atoms) {
  for (const auto& atom : atoms) {
    if (!db.is_endogenous(atom))
      throw Error(ErrorKind::NotEndogenous, atom.str() + " is not an endogenous tuple");
  }
}

}  // namespace

std::string SystemDescription::render() const {
  std::string out = "(a) predicate completion axioms:\n";
  for (const auto& axiom : completion_axioms) out += "    " + axiom + "\n";
  out += "(b) unique names: " + (unique_names.empty() ? std::string("(single constant)") : unique_names) + "\n";
  out += "(c) extended constraint: " + constraint_ext + "\n";
  out += "(d) inclusion dependencies:\n";
  for (const auto& dep : inclusion_dependencies) out += "    " + dep + "\n";
  out += "normality defaults:\n";
  for (const auto& def : normality_defaults) out += "    " + def + "\n";
  return out;
}

DiagnosisProblem build_diagnosis_problem(const Instance& db, const ConjunctiveQuery& query,
                                         SearchBudget* budget) {
  if (!query.boolean()) throw Error(ErrorKind::NotBoolean, "diagnosis problems are built for boolean queries");
  if (!evaluate_bcq(db, query, budget))
    throw Error(ErrorKind::ObservationAbsent, "the query does not hold, there is nothing to diagnose");
  return DiagnosisProblem{db, query, build_sd(db, query)};
}

bool is_diagnosis(const DiagnosisProblem& problem, const AtomSet& abnormal, SearchBudget* budget) {
  require_endogenous_subset(problem.instance, abnormal);
  return !evaluate_bcq(delete_atoms(problem.instance, abnormal), problem.query, budget);
}

std::vector<Diagnosis> minimal_diagnoses(const DiagnosisProblem& problem, SearchBudget* budget) {
  const Instance& db = problem.instance;
  const std::vector<AtomSet> images = minimal_witness_images(db, problem.query, budget);
  std::vector<AtomSet> restricted;
  restricted.reserve(images.size());
  for (const auto& image : images) {
    AtomSet endo_part = set_intersection(image, db.endogenous());
    if (endo_part.empty()) return {};  // unfalsifiable within D^n
    restricted.push_back(std::move(endo_part));
  }
  std::vector<Diagnosis> out;
  for (auto& hs : minimal_hitting_sets(minimal_sets(restricted), budget)) out.push_back(Diagnosis{std::move(hs)});
  return out;
}

std::vector<Diagnosis> diagnoses_containing(const DiagnosisProblem& problem, const GroundAtom& tuple,
                                            SearchBudget* budget) {
  if (!problem.instance.is_endogenous(tuple))
    throw Error(ErrorKind::NotEndogenous, tuple.str() + " is not an endogenous tuple");
  std::vector<Diagnosis> out;
  for (auto& diagnosis : minimal_diagnoses(problem, budget)) {
    if (diagnosis.abnormal.count(tuple)) out.push_back(std::move(diagnosis));
  }
  return out;
}

std::vector<Diagnosis> mcd(const DiagnosisProblem& problem, const GroundAtom& tuple, SearchBudget* budget) {
  std::vector<Diagnosis> containing = diagnoses_containing(problem, tuple, budget);
  std::size_t smallest = std::numeric_limits<std::size_t>::max();
  for (const auto& d : containing) smallest = std::min(smallest, d.abnormal.size());
  std::vector<Diagnosis> out;
  for (auto& d : containing) {
    if (d.abnormal.size() == smallest) out.push_back(std::move(d));
  }
  return out;
}

CauseSet causes_from_diagnoses(const DiagnosisProblem& problem, SearchBudget* budget) {
  CauseSet out;
  out.query = problem.query;
  out.instance_id = problem.instance.snapshot_id();
  std::map<GroundAtom, AtomSetFamily> by_cause;
  for (const auto& diagnosis : minimal_diagnoses(problem, budget)) {
    for (const auto& tuple : diagnosis.abnormal) {
      by_cause[tuple].insert(set_difference(diagnosis.abnormal, {tuple}));
    }
  }
  for (auto& [tuple, contingencies] : by_cause) {
    std::size_t smallest = std::numeric_limits<std::size_t>::max();
    for (const auto& gamma : contingencies) smallest = std::min(smallest, gamma.size());
    out.reports.push_back(CauseReport{tuple, std::move(contingencies),
                                      Rational::reciprocal_of(static_cast<std::int64_t>(smallest) + 1)});
  }
  std::sort(out.reports.begin(), out.reports.end(),
            [](const CauseReport& a, const CauseReport& b) { return a.cause < b.cause; });
  return out;
}

}  // namespace causerep
