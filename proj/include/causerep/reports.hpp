#pragma once

#include <string>
#include <vector>

#include "causerep/core.hpp"
#include "causerep/query.hpp"
#include "causerep/rational.hpp"

namespace causerep {

// An actual cause with every S-minimal contingency set and its exact
// responsibility. The cause is endogenous, never occurs inside its own
// contingency sets, and responsibility is 1/(1 + size of the smallest set).
struct CauseReport {
  GroundAtom cause;
  AtomSetFamily minimal_contingencies;
  Rational responsibility;

  auto operator<=>(const CauseReport&) const = default;
};

struct CauseSet {
  std::vector<CauseReport> reports;  // sorted by cause, pairwise distinct
  ConjunctiveQuery query;
  std::string instance_id;

  bool contains(const GroundAtom& atom) const {
    for (const auto& r : reports) {
      if (r.cause == atom) return true;
    }
    return false;
  }
  const CauseReport* find(const GroundAtom& atom) const {
    for (const auto& r : reports) {
      if (r.cause == atom) return &r;
    }
    return nullptr;
  }
  AtomSet causes() const {
    AtomSet out;
    for (const auto& r : reports) out.insert(r.cause);
    return out;
  }
  // Report-level equality; query and snapshot id are provenance, not content.
  bool same_reports(const CauseSet& other) const { return reports == other.reports; }
};

enum class RepairKind { Subset, Cardinality };

struct Repair {
  Instance instance;
  AtomSet deleted;

  auto operator<=>(const Repair&) const = default;
};

struct RepairSet {
  RepairKind kind = RepairKind::Subset;
  std::vector<Repair> repairs;  // sorted by deleted set

  std::vector<AtomSet> deletions() const {
    std::vector<AtomSet> out;
    out.reserve(repairs.size());
    for (const auto& r : repairs) out.push_back(r.deleted);
    return out;
  }
  bool same_deletions(const RepairSet& other) const { return deletions() == other.deletions(); }
};

// DF(D, D^n, kappa, t): deletion sets of the S-repairs that remove t using
// endogenous tuples only.
struct DFCollection {
  GroundAtom tuple;
  AtomSetFamily difference_sets;
};

// Per violation view: the actual causes paired with their S-minimal
// contingency sets, the <t, {C_1(t),...,C_m(t)}> bundles consumed by the
// repairs-from-causes construction.
struct CauseEntry {
  GroundAtom tuple;
  AtomSetFamily contingencies;

  auto operator<=>(const CauseEntry&) const = default;
};

struct CausePackage {
  std::vector<std::pair<DenialConstraint, std::vector<CauseEntry>>> per_view;
};

struct Diagnosis {
  AtomSet abnormal;

  auto operator<=>(const Diagnosis&) const = default;
};

}  // namespace causerep
