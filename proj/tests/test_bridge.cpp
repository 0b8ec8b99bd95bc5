#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "causerep/bridge.hpp"
#include "causerep/causality.hpp"
#include "causerep/oracle.hpp"
#include "causerep/repairs.hpp"
#include "helpers.hpp"

using namespace causerep;
using namespace causerep::testing;

TEST_CASE("df sets of the running example") {
  const auto d = ex_running();
  const auto kappa = dc_of_query(ex_running_query());

  CHECK(df_sets(d, kappa, atom("R(a4,a3)")).difference_sets == family({{"R(a4,a3)", "R(a3,a3)"}}));
  CHECK(df_sets(d, kappa, atom("S(a3)")).difference_sets == family({{"S(a3)"}}));
  CHECK(df_sets(d, kappa, atom("R(a3,a3)")).difference_sets ==
        family({{"R(a4,a3)", "R(a3,a3)"}, {"R(a3,a3)", "S(a4)"}}));
  CHECK(df_sets(d, kappa, atom("S(a2)")).difference_sets.empty());
  CHECK(df_sets(d, kappa, atom("R(a2,a1)")).difference_sets.empty());

  CHECK_THROWS_AS(df_sets(ex_partitioned(), kappa, atom("R(a4,a3)")), Error);
}

TEST_CASE("df sets exclude deletions that touch exogenous tuples") {
  const auto db = parse_facts("S(a3).\nS(a4).\nR(a4,a3). @exo");
  const auto kappa = dc_of_query(ex_running_query());
  // The only way to delete R(a4,a3) is not admissible for DF.
  CHECK(df_sets(db, kappa, atom("S(a3)")).difference_sets == family({{"S(a3)"}}));
  CHECK(df_sets(db, kappa, atom("S(a4)")).difference_sets == family({{"S(a4)"}}));
}

TEST_CASE("causes from repairs reproduce the running example") {
  const auto causes = causes_from_repairs(ex_running(), ex_running_query());
  REQUIRE(causes.reports.size() == 4);
  CHECK(causes.find(atom("S(a3)"))->responsibility == Rational(1, 1));
  CHECK(causes.find(atom("R(a4,a3)"))->responsibility == Rational(1, 2));
  CHECK(causes.find(atom("R(a3,a3)"))->responsibility == Rational(1, 2));
  CHECK(causes.find(atom("S(a4)"))->responsibility == Rational(1, 2));

  // Consistent instance wrt kappa(Q): no causes at all.
  const auto consistent = parse_facts("S(a2).\nR(a2,a1).");
  CHECK(causes_from_repairs(consistent, ex_running_query()).reports.empty());
}

TEST_CASE("causes from repairs equal the direct engine") {
  RandomInputs rand(7401);
  for (int round = 0; round < 250; ++round) {
    const Instance db = rand.instance(8, 0.25);
    const ConjunctiveQuery q = rand.bcq(3);
    CHECK(causes_from_repairs(db, q).same_reports(actual_causes(db, q)));
  }
}

TEST_CASE("df minimum size is the reciprocal of responsibility") {
  RandomInputs rand(7402);
  for (int round = 0; round < 200; ++round) {
    const Instance db = rand.instance(7, 0.2);
    const ConjunctiveQuery q = rand.bcq(3);
    if (!evaluate_bcq(db, q)) continue;
    const DenialConstraint kappa = dc_of_query(q);
    for (const auto& t : db.endogenous()) {
      const auto df = df_sets(db, kappa, t).difference_sets;
      const Rational rho = responsibility(db, q, t);
      if (df.empty()) {
        CHECK(rho == Rational::zero());
      } else {
        std::size_t smallest = db.size() + 1;
        for (const auto& s : df) smallest = std::min(smallest, s.size());
        CHECK(rho == Rational::reciprocal_of(static_cast<std::int64_t>(smallest)));
      }
    }
  }
}

TEST_CASE("cause/contingency blocks rebuild exactly the s-repairs") {
  // Every t with C(t) in CT(t) yields the repair deleting {t} u C(t), and
  // every s-repair arises that way.
  RandomInputs rand(7403);
  for (int round = 0; round < 150; ++round) {
    const Instance db = rand.instance(7, 0.0);
    const ConjunctiveQuery view = rand.bcq(3);
    if (!evaluate_bcq(db, view)) continue;
    const CauseSet causes = actual_causes(db, view);
    std::set<AtomSet> rebuilt;
    for (const auto& report : causes.reports) {
      for (const auto& gamma : report.minimal_contingencies) {
        rebuilt.insert(set_union(gamma, {report.cause}));
      }
    }
    const auto srep = s_repairs(db, {dc_of_query(view)});
    const auto dels = srep.deletions();
    CHECK(rebuilt == std::set<AtomSet>(dels.begin(), dels.end()));
  }
}

TEST_CASE("repairs from causes: two-constraint example") {
  const auto db = ex_two_dcs();
  const auto sigma = ex_two_dcs_sigma();
  const auto package = make_cause_package(db, sigma);

  // Both views have only counterfactual causes here.
  for (const auto& [dc, entries] : package.per_view) {
    for (const auto& entry : entries) CHECK(entry.contingencies == family({{}}));
  }

  const auto repairs = repairs_from_causes(db, sigma, package);
  CHECK(repairs.deletions() ==
        std::vector<AtomSet>{atoms({"P(a,b)", "S(c,d)"}), atoms({"R(b,c)"})});
}

TEST_CASE("repairs from causes: single constraint join example") {
  const auto repairs =
      repairs_from_causes(ex_join(), {ex_join_dc()}, make_cause_package(ex_join(), {ex_join_dc()}));
  CHECK(repairs.deletions() == std::vector<AtomSet>{atoms({"P(a,b)"}), atoms({"R(b,b)", "R(b,c)"})});
}

TEST_CASE("repairs from causes: nothing violated") {
  const auto db = parse_facts("P(a,b).");
  const std::vector<DenialConstraint> sigma = {ex_join_dc()};
  const auto repairs = repairs_from_causes(db, sigma, make_cause_package(db, sigma));
  REQUIRE(repairs.repairs.size() == 1);
  CHECK(repairs.repairs[0].instance == db);
}

TEST_CASE("repairs from causes must cover choices beyond minimal hitting sets") {
  // One cause (R(1,1)) covers both views, so {R(1,1)} is the only minimal
  // hitting set of the per-view cause sets. The repair deleting P(1) and
  // R(1,1) can only be assembled by also considering non-minimal covers.
  const auto db = parse_facts("P(x1).\nR(x1,x1).\nR(x1,x2).");
  const std::vector<DenialConstraint> sigma = {parse_dc(":- P(X), R(X,Y)."), parse_dc(":- R(X,X).")};
  const auto repairs = repairs_from_causes(db, sigma, make_cause_package(db, sigma));
  CHECK(repairs.same_deletions(oracle::brute_s_repairs(db, sigma)));
  CHECK(repairs.deletions() ==
        std::vector<AtomSet>{atoms({"P(x1)", "R(x1,x1)"}), atoms({"R(x1,x1)", "R(x1,x2)"})});
}

TEST_CASE("repairs from causes rejects bad input") {
  CHECK_THROWS_AS(
      repairs_from_causes(ex_partitioned(), {ex_join_dc()}, CausePackage{}), Error);

  // Package views must match the constraint set.
  CHECK_THROWS_AS(repairs_from_causes(ex_join(), {ex_join_dc()}, CausePackage{}), Error);

  // A fabricated entry claiming R(b,c) alone falsifies the view fails the
  // spot check: R(b,b) keeps the join alive.
  CausePackage bogus = make_cause_package(ex_join(), {ex_join_dc()});
  bogus.per_view[0].second.push_back(CauseEntry{atom("R(b,c)"), family({{}})});
  CHECK_THROWS_AS(repairs_from_causes(ex_join(), {ex_join_dc()}, bogus), Error);
}

TEST_CASE("repairs from causes equal the brute-force repairs") {
  RandomInputs rand(7404);
  for (int round = 0; round < 200; ++round) {
    const Instance db = rand.instance(8, 0.0);
    const auto sigma = rand.dcs(3, 3);
    const auto package = make_cause_package(db, sigma);
    CHECK(repairs_from_causes(db, sigma, package).same_deletions(oracle::brute_s_repairs(db, sigma)));
  }
}

TEST_CASE("c-repairs from most responsible causes") {
  const auto crep = c_repairs_from_mrc(ex_join(), ex_join_dc());
  REQUIRE(crep.repairs.size() == 1);
  CHECK(crep.repairs[0].deleted == atoms({"P(a,b)"}));

  const auto running = c_repairs_from_mrc(ex_running(), dc_of_query(ex_running_query()));
  REQUIRE(running.repairs.size() == 1);
  CHECK(running.repairs[0].deleted == atoms({"S(a3)"}));

  const auto consistent = parse_facts("P(a,b).");
  const auto same = c_repairs_from_mrc(consistent, ex_join_dc());
  REQUIRE(same.repairs.size() == 1);
  CHECK(same.repairs[0].instance == consistent);
}

TEST_CASE("c-repairs from mrc equal the repair engine and the oracle") {
  RandomInputs rand(7405);
  for (int round = 0; round < 200; ++round) {
    const Instance db = rand.instance(8, 0.0);
    const DenialConstraint dc = rand.dc(3);
    const RepairSet via_mrc = c_repairs_from_mrc(db, dc);
    CHECK(via_mrc.same_deletions(c_repairs(db, {dc})));
    CHECK(via_mrc.same_deletions(oracle::brute_c_repairs(db, {dc})));
  }
}

TEST_CASE("cqa from causes on the published example") {
  const auto db = ex_cqa();
  const auto dc = ex_join_dc();
  CHECK(actual_causes(db, violation_view(dc)).causes() == atoms({"P(a,b)", "R(b,c)"}));
  CHECK(cqa_from_causes(db, dc, atom("R(a,d)")));
  CHECK_FALSE(cqa_from_causes(db, dc, atom("P(a,b)")));
  CHECK_FALSE(cqa_from_causes(db, dc, atom("R(b,c)")));
  CHECK_FALSE(cqa_from_causes(db, dc, atom("T(nope)")));
}

TEST_CASE("cqa from causes equals repair-side consistent answers") {
  RandomInputs rand(7406);
  for (int round = 0; round < 200; ++round) {
    const Instance db = rand.instance(8, 0.0);
    const DenialConstraint dc = rand.dc(3);
    for (const auto& a : db.atoms()) {
      CHECK(cqa_from_causes(db, dc, a) ==
            consistent_answer_ground(db, {dc}, a, RepairSemantics::Subset));
    }
  }
}
