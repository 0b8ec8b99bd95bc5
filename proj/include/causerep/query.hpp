#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "causerep/core.hpp"

namespace causerep {

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

// Variables start uppercase, constants start lowercase (or are quoted), so
// the two classes never collide lexically.
using Term = std::variant<Variable, Constant>;

bool is_variable(const Term& term);
std::string term_str(const Term& term);

struct QueryAtom {
  std::string predicate;
  std::vector<Term> args;

  std::string str() const;
  auto operator<=>(const QueryAtom&) const = default;
};

// exists y1..yk (A1 and ... and Am), optionally with free variables in front.
struct ConjunctiveQuery {
  std::vector<std::string> free_vars;
  std::vector<QueryAtom> atoms;

  bool boolean() const { return free_vars.empty(); }
  // All variable names in order of first occurrence across the atom list.
  std::vector<std::string> variables() const;
  std::string str() const;
  auto operator<=>(const ConjunctiveQuery&) const = default;
};

// forall x  not (A1 and ... and An); no built-in comparisons.
struct DenialConstraint {
  std::vector<QueryAtom> atoms;

  std::string str() const;
  auto operator<=>(const DenialConstraint&) const = default;
};

// A satisfying assignment together with the set of ground atoms it touches.
struct Witness {
  std::map<std::string, Constant> assignment;
  AtomSet image;

  auto operator<=>(const Witness&) const = default;
};

// --- parsing ------------------------------------------------------------
//
// rule      := head ":-" body "." | ":-" body "."
// head      := ident "(" [varlist] ")"
// body      := atom ("," atom)*
// atom      := ident "(" term ("," term)* ")"
// term      := VARIABLE | CONSTANT | quoted-string
// comments  := "%" to end of line
//
// When a schema is supplied, unknown predicates and arity violations are
// rejected; without one, predicates are taken at face value (arity still has
// to be consistent within the parsed text).

ConjunctiveQuery parse_query(const std::string& text, const Schema* schema = nullptr);
DenialConstraint parse_dc(const std::string& text, const Schema* schema = nullptr);
std::vector<DenialConstraint> parse_dcs(const std::string& text, const Schema* schema = nullptr);
// Ground atom written as "P(a,b)" (trailing "." tolerated).
GroundAtom parse_ground_atom(const std::string& text, const Schema* schema = nullptr);

// --- conversions ----------------------------------------------------------

// kappa(Q): the DC stating that a boolean Q must be false.
DenialConstraint dc_of_query(const ConjunctiveQuery& query);
// V^kappa: the boolean query witnessing a violation.
ConjunctiveQuery violation_view(const DenialConstraint& dc);
// kappa^<a>: DC for the answer `binding` to an open query.
DenialConstraint ground_answer_dc(const ConjunctiveQuery& query, const std::vector<Constant>& binding);

// --- evaluation -----------------------------------------------------------

bool evaluate_bcq(const Instance& db, const ConjunctiveQuery& query, SearchBudget* budget = nullptr);

// Bindings of the free variables; {()} for a true boolean query.
std::set<std::vector<Constant>> answers(const Instance& db, const ConjunctiveQuery& query,
                                        SearchBudget* budget = nullptr);

// All satisfying assignments with their images. With minimal_only, one
// witness per inclusion-minimal image (the least assignment is kept).
std::vector<Witness> witnesses(const Instance& db, const ConjunctiveQuery& query, bool minimal_only,
                               SearchBudget* budget = nullptr);

// Inclusion-minimal witness images of a boolean query; the backbone for
// repairs, causes and diagnoses.
std::vector<AtomSet> minimal_witness_images(const Instance& db, const ConjunctiveQuery& query,
                                            SearchBudget* budget = nullptr);

}  // namespace causerep
