#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "causerep/causality.hpp"
#include "causerep/oracle.hpp"
#include "helpers.hpp"

using namespace causerep;
using namespace causerep::testing;

TEST_CASE("counterfactual causes in the running example") {
  const auto d = ex_running();
  const auto q = ex_running_query();
  CHECK(is_counterfactual_cause(d, q, atom("S(a3)")));
  CHECK_FALSE(is_counterfactual_cause(d, q, atom("R(a4,a3)")));

  // A query that fails has no counterfactual causes.
  const auto no = parse_query("q() :- T(X).");
  CHECK_FALSE(evaluate_bcq(d, no));
  for (const auto& t : d.endogenous()) CHECK_FALSE(is_counterfactual_cause(d, no, t));

  CHECK_THROWS_AS(is_counterfactual_cause(d, q, atom("T(zz)")), Error);
  CHECK_THROWS_AS(is_counterfactual_cause(ex_partitioned(), q, atom("R(a4,a3)")), Error);
}

TEST_CASE("actual causes in the running example") {
  const auto d = ex_running();
  const auto q = ex_running_query();
  CHECK(is_actual_cause(d, q, atom("R(a4,a3)")));
  CHECK_FALSE(is_actual_cause(d, q, atom("R(a2,a1)")));
  CHECK_FALSE(is_actual_cause(d, q, atom("S(a2)")));

  const auto causes = actual_causes(d, q);
  REQUIRE(causes.reports.size() == 4);
  CHECK(causes.causes() == atoms({"S(a3)", "S(a4)", "R(a4,a3)", "R(a3,a3)"}));
  CHECK(causes.find(atom("S(a3)"))->responsibility == Rational(1, 1));
  CHECK(causes.find(atom("S(a4)"))->responsibility == Rational(1, 2));
  CHECK(causes.find(atom("R(a4,a3)"))->responsibility == Rational(1, 2));
  CHECK(causes.find(atom("R(a3,a3)"))->responsibility == Rational(1, 2));

  // Contingency families as published for the associated constraint.
  CHECK(causes.find(atom("S(a3)"))->minimal_contingencies == family({{}}));
  CHECK(causes.find(atom("R(a4,a3)"))->minimal_contingencies == family({{"R(a3,a3)"}}));
  CHECK(causes.find(atom("R(a3,a3)"))->minimal_contingencies == family({{"R(a4,a3)"}, {"S(a4)"}}));
  CHECK(causes.find(atom("S(a4)"))->minimal_contingencies == family({{"R(a3,a3)"}}));
}

TEST_CASE("exogenous tuples change what counts as a cause") {
  // D^n = {S(a3), S(a4)}, D^x = {R(a4,a3)}: both S tuples are counterfactual.
  const auto d = ex_partitioned();
  const auto q = ex_running_query();
  CHECK(is_counterfactual_cause(d, q, atom("S(a3)")));
  CHECK(is_counterfactual_cause(d, q, atom("S(a4)")));

  // Adding R(a3,a3) as exogenous removes S(a4) from the causes entirely.
  const auto with_exo = parse_facts("S(a3).\nS(a4).\nR(a4,a3). @exo\nR(a3,a3). @exo");
  CHECK_FALSE(is_counterfactual_cause(with_exo, q, atom("S(a4)")));
  CHECK_FALSE(is_actual_cause(with_exo, q, atom("S(a4)")));
  CHECK(actual_causes(with_exo, q).causes() == atoms({"S(a3)"}));

  // Added endogenous instead, S(a4) stays an actual cause via {R(a3,a3)}.
  const auto with_endo = parse_facts("S(a3).\nS(a4).\nR(a3,a3).\nR(a4,a3). @exo");
  CHECK(is_actual_cause(with_endo, q, atom("S(a4)")));
  CHECK(minimal_contingency_sets(with_endo, q, atom("S(a4)")).count(atoms({"R(a3,a3)"})) == 1);
}

TEST_CASE("contingency sets in the join example") {
  const auto d = ex_join();
  const auto view = violation_view(ex_join_dc());
  CHECK(minimal_contingency_sets(d, view, atom("R(b,c)")) == family({{"R(b,b)"}}));
  CHECK(minimal_contingency_sets(d, view, atom("R(b,b)")) == family({{"R(b,c)"}}));
  CHECK(minimal_contingency_sets(d, view, atom("P(a,b)")) == family({{}}));

  const auto causes = actual_causes(d, view);
  CHECK(causes.causes() == atoms({"P(a,b)", "R(b,c)", "R(b,b)"}));
  CHECK(most_responsible_causes(d, view) == atoms({"P(a,b)"}));
}

TEST_CASE("non-causes have no contingency sets") {
  const auto d = ex_running();
  CHECK(minimal_contingency_sets(d, ex_running_query(), atom("S(a2)")).empty());
}

TEST_CASE("responsibility values") {
  const auto d = ex_running();
  const auto q = ex_running_query();
  CHECK(responsibility(d, q, atom("S(a3)")) == Rational(1, 1));
  CHECK(responsibility(d, q, atom("R(a4,a3)")) == Rational(1, 2));
  CHECK(responsibility(d, q, atom("R(a2,a1)")) == Rational::zero());

  const auto no = parse_query("q() :- T(X).");
  CHECK_THROWS_AS(responsibility(d, no, atom("S(a3)")), Error);
  try {
    responsibility(d, no, atom("S(a3)"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::QueryNotSatisfied);
  }
}

TEST_CASE("most responsible causes") {
  CHECK(most_responsible_causes(ex_running(), ex_running_query()) == atoms({"S(a3)"}));
  CHECK(most_responsible_causes(parse_facts("T(a)."), ex_running_query()).empty());
}

TEST_CASE("no causes when the query holds only through exogenous tuples") {
  const auto db = parse_facts("[exogenous]\nS(a).\nR(a,a).\n[endogenous]\nS(b).");
  const auto q = ex_running_query();
  CHECK(evaluate_bcq(db, q));
  CHECK(actual_causes(db, q).reports.empty());
  CHECK(responsibility(db, q, atom("S(b)")) == Rational::zero());
}

TEST_CASE("counterfactual iff empty contingency iff responsibility one") {
  RandomInputs rand(7301);
  for (int round = 0; round < 250; ++round) {
    const Instance db = rand.instance(7, 0.25);
    const ConjunctiveQuery q = rand.bcq(3);
    if (!evaluate_bcq(db, q)) continue;
    const CauseSet causes = actual_causes(db, q);
    for (const auto& t : db.endogenous()) {
      const bool counterfactual = is_counterfactual_cause(db, q, t);
      const CauseReport* report = causes.find(t);
      const bool empty_gamma = report && report->minimal_contingencies.count({}) == 1;
      const bool rho_one = report && report->responsibility == Rational(1, 1);
      CHECK(counterfactual == empty_gamma);
      CHECK(counterfactual == rho_one);
    }
  }
}

TEST_CASE("reported contingencies satisfy the definition literally") {
  RandomInputs rand(7302);
  for (int round = 0; round < 200; ++round) {
    const Instance db = rand.instance(7, 0.25);
    const ConjunctiveQuery q = rand.bcq(3);
    const CauseSet causes = actual_causes(db, q);
    for (const auto& report : causes.reports) {
      CHECK(db.is_endogenous(report.cause));
      std::size_t smallest = db.size() + 1;
      for (const auto& gamma : report.minimal_contingencies) {
        smallest = std::min(smallest, gamma.size());
        CHECK(is_subset(gamma, db.endogenous()));
        CHECK(gamma.count(report.cause) == 0);
        CHECK(evaluate_bcq(delete_atoms(db, gamma), q));
        CHECK_FALSE(evaluate_bcq(delete_atoms(db, set_union(gamma, {report.cause})), q));
        // S-minimality: each one-smaller subset keeps the query true.
        for (const auto& dropped : gamma) {
          AtomSet sub = gamma;
          sub.erase(dropped);
          CHECK(evaluate_bcq(delete_atoms(db, set_union(sub, {report.cause})), q));
        }
      }
      CHECK(report.responsibility == Rational::reciprocal_of(static_cast<std::int64_t>(smallest) + 1));
    }
  }
}

TEST_CASE("engine equals the brute-force oracle") {
  RandomInputs rand(7303);
  for (int round = 0; round < 200; ++round) {
    const Instance db = rand.instance(8, 0.25);
    const ConjunctiveQuery q = rand.bcq(3);
    const CauseSet fast = actual_causes(db, q);
    const CauseSet brute = oracle::brute_causes(db, q);
    CHECK(fast.same_reports(brute));
  }
}

TEST_CASE("inserting tuples is non-monotone in the right direction") {
  RandomInputs rand(7304);
  int endo_runs = 0, exo_runs = 0;
  while (endo_runs < 120 || exo_runs < 120) {
    const Instance db = rand.instance(7, 0.25);
    const ConjunctiveQuery q = rand.bcq(3);
    GroundAtom fresh = rand.ground_atom();
    if (db.contains(fresh)) continue;

    std::vector<std::pair<GroundAtom, Tag>> tagged;
    for (const auto& a : db.endogenous()) tagged.emplace_back(a, Tag::Endogenous);
    for (const auto& a : db.exogenous()) tagged.emplace_back(a, Tag::Exogenous);

    if (endo_runs < 120) {
      auto grown = tagged;
      grown.emplace_back(fresh, Tag::Endogenous);
      // Every cause before the endogenous insertion stays a cause.
      const AtomSet before = actual_causes(db, q).causes();
      const AtomSet after = actual_causes(make_instance(grown), q).causes();
      CHECK(is_subset(before, after));
      ++endo_runs;
    }
    if (exo_runs < 120 && evaluate_bcq(db, q)) {
      // An exogenous insertion can only lose causes. This needs the query
      // to hold beforehand: if the inserted tuple is what completes the
      // first witness, a brand-new cause appears out of nothing.
      auto grown = tagged;
      grown.emplace_back(fresh, Tag::Exogenous);
      const AtomSet before = actual_causes(db, q).causes();
      const AtomSet after = actual_causes(make_instance(grown), q).causes();
      CHECK(is_subset(after, before));
      ++exo_runs;
    }
  }
}

TEST_CASE("tight budget raises instead of truncating") {
  SearchBudget tiny;
  tiny.cap = 4;
  CHECK_THROWS_AS(actual_causes(ex_running(), ex_running_query(), &tiny), ResourceExceeded);
}
