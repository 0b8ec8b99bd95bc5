#pragma once

#include <random>
#include <string>
#include <vector>

#include "causerep/facts.hpp"
#include "causerep/query.hpp"

namespace causerep::testing {

inline GroundAtom atom(const std::string& text) { return parse_ground_atom(text); }

inline AtomSet atoms(const std::vector<std::string>& texts) {
  AtomSet out;
  for (const auto& t : texts) out.insert(atom(t));
  return out;
}

inline AtomSetFamily family(const std::vector<std::vector<std::string>>& texts) {
  AtomSetFamily out;
  for (const auto& member : texts) out.insert(atoms(member));
  return out;
}

// R = {(a4,a3),(a2,a1),(a3,a3)}, S = {a4,a2,a3}, everything endogenous.
inline Instance ex_running() {
  return parse_facts("R(a4,a3).\nR(a2,a1).\nR(a3,a3).\nS(a4).\nS(a2).\nS(a3).");
}

inline ConjunctiveQuery ex_running_query() { return parse_query("q() :- S(X), R(X,Y), S(Y)."); }

// D^n = {S(a3),S(a4)}, D^x = {R(a4,a3)}.
inline Instance ex_partitioned() {
  return parse_facts("S(a3).\nS(a4).\nR(a4,a3). @exo");
}

// {P(a,b), R(b,c), R(b,b)} with the join constraint between P and R.
inline Instance ex_join() { return parse_facts("P(a,b).\nR(b,c).\nR(b,b)."); }
inline DenialConstraint ex_join_dc() { return parse_dc(":- P(X,Y), R(Y,Z)."); }

// {P(a,b), R(b,c), R(a,d)} for the consistent-answer example.
inline Instance ex_cqa() { return parse_facts("P(a,b).\nR(b,c).\nR(a,d)."); }

// {P(a,b), R(b,c), S(c,d)} with two constraints.
inline Instance ex_two_dcs() { return parse_facts("P(a,b).\nR(b,c).\nS(c,d)."); }
inline std::vector<DenialConstraint> ex_two_dcs_sigma() {
  return {parse_dc(":- P(X,Y), R(Y,Z)."), parse_dc(":- R(X,Y), S(Y,Z).")};
}

// --- random inputs for the property suites ---------------------------------

struct RandomInputs {
  std::mt19937 rng;

  explicit RandomInputs(std::uint32_t seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

  Constant constant() {
    static const std::vector<std::string> pool = {"a", "b", "c"};
    return Constant{pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))]};
  }

  GroundAtom ground_atom() {
    static const std::vector<std::pair<std::string, int>> preds = {{"S", 1}, {"T", 1}, {"R", 2}, {"P", 2}};
    const auto& [name, arity] = preds[static_cast<std::size_t>(pick(0, static_cast<int>(preds.size()) - 1))];
    GroundAtom out;
    out.predicate = name;
    for (int i = 0; i < arity; ++i) out.args.push_back(constant());
    return out;
  }

  // Up to max_atoms tuples; exogenous with probability exo_p.
  Instance instance(int max_atoms, double exo_p = 0.0) {
    std::vector<std::pair<GroundAtom, Tag>> tagged;
    const int n = pick(0, max_atoms);
    for (int i = 0; i < n; ++i) {
      tagged.emplace_back(ground_atom(), chance(exo_p) ? Tag::Exogenous : Tag::Endogenous);
    }
    // A tuple drawn twice with different tags keeps the endogenous one.
    std::vector<std::pair<GroundAtom, Tag>> deduped;
    for (const auto& [a, tag] : tagged) {
      bool seen = false;
      for (auto& [b, other] : deduped) {
        if (a == b) {
          seen = true;
          if (tag == Tag::Endogenous) other = Tag::Endogenous;
        }
      }
      if (!seen) deduped.emplace_back(a, tag);
    }
    return make_instance(deduped);
  }

  Term term(std::vector<std::string>& vars) {
    if (chance(0.2)) return constant();
    static const std::vector<std::string> pool = {"X", "Y", "Z"};
    const std::string name = pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))];
    vars.push_back(name);
    return Variable{name};
  }

  ConjunctiveQuery bcq(int max_atoms) {
    static const std::vector<std::pair<std::string, int>> preds = {{"S", 1}, {"T", 1}, {"R", 2}, {"P", 2}};
    ConjunctiveQuery out;
    std::vector<std::string> vars;
    const int n = pick(1, max_atoms);
    for (int i = 0; i < n; ++i) {
      const auto& [name, arity] = preds[static_cast<std::size_t>(pick(0, static_cast<int>(preds.size()) - 1))];
      QueryAtom qa;
      qa.predicate = name;
      for (int j = 0; j < arity; ++j) qa.args.push_back(term(vars));
      out.atoms.push_back(std::move(qa));
    }
    return out;
  }

  DenialConstraint dc(int max_atoms) { return DenialConstraint{bcq(max_atoms).atoms}; }

  std::vector<DenialConstraint> dcs(int max_constraints, int max_atoms) {
    std::vector<DenialConstraint> out;
    const int n = pick(1, max_constraints);
    for (int i = 0; i < n; ++i) out.push_back(dc(max_atoms));
    return out;
  }
};

}  // namespace causerep::testing
