#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "causerep/errors.hpp"

namespace causerep {

// Opaque domain element; two constants are equal iff their symbols are.
struct Constant {
  std::string symbol;

  Constant() = default;
  explicit Constant(std::string s) : symbol(std::move(s)) {}

  auto operator<=>(const Constant&) const = default;
};

struct PredicateSig {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const PredicateSig&) const = default;
};

// P(c1,...,cn). Ordering is predicate name first, then the argument tuple,
// which is the canonical order every enumeration in this library uses.
struct GroundAtom {
  std::string predicate;
  std::vector<Constant> args;

  GroundAtom() = default;
  GroundAtom(std::string pred, std::vector<Constant> as) : predicate(std::move(pred)), args(std::move(as)) {}

  std::size_t arity() const { return args.size(); }
  std::string str() const;

  auto operator<=>(const GroundAtom&) const = default;
};

using AtomSet = std::set<GroundAtom>;
using AtomSetFamily = std::set<AtomSet>;

std::string to_string(const AtomSet& atoms);

// Predicate name -> arity map shared by instances, queries and constraints.
class Schema {
 public:
  // Records the signature, or throws ArityMismatch if the name is already
  // bound to a different arity.
  void declare(const std::string& name, std::size_t arity);
  std::optional<std::size_t> arity_of(const std::string& name) const;
  bool knows(const std::string& name) const { return arities_.count(name) != 0; }
  std::vector<PredicateSig> signatures() const;

 private:
  std::map<std::string, std::size_t> arities_;
};

enum class Tag { Endogenous, Exogenous };

// Immutable instance D = D^n u D^x with the endogenous/exogenous split.
// All mutating-looking operations return fresh instances.
class Instance {
 public:
  Instance() = default;
  Instance(AtomSet endogenous, AtomSet exogenous);

  const AtomSet& endogenous() const { return endo_; }
  const AtomSet& exogenous() const { return exo_; }

  bool contains(const GroundAtom& atom) const { return endo_.count(atom) || exo_.count(atom); }
  bool is_endogenous(const GroundAtom& atom) const { return endo_.count(atom) != 0; }
  bool empty() const { return endo_.empty() && exo_.empty(); }
  std::size_t size() const { return endo_.size() + exo_.size(); }

  // Union of both parts, in canonical order.
  AtomSet atoms() const;
  Schema schema() const;

  // All tuples re-tagged endogenous; the paper's CS(D, emptyset, V) convention.
  Instance all_endogenous() const;

  // Stable content hash used as a snapshot id in reports.
  std::string snapshot_id() const;

  auto operator<=>(const Instance&) const = default;

 private:
  AtomSet endo_;
  AtomSet exo_;
};

// Builds an instance from tagged atoms. Duplicate (atom, tag) pairs collapse;
// an atom carrying both tags is a ConflictingTag error, inconsistent arities
// are an ArityMismatch.
Instance make_instance(const std::vector<std::pair<GroundAtom, Tag>>& atoms);

// D minus S, keeping the tag of every surviving atom. Atoms not in D are ignored.
Instance delete_atoms(const Instance& db, const AtomSet& removed);

// Delta(D, D'): tags ignored.
AtomSet symmetric_difference(const Instance& a, const Instance& b);

AtomSet set_union(const AtomSet& a, const AtomSet& b);
AtomSet set_difference(const AtomSet& a, const AtomSet& b);
AtomSet set_intersection(const AtomSet& a, const AtomSet& b);
bool is_subset(const AtomSet& a, const AtomSet& b);

// Drops every member that strictly contains another member.
std::vector<AtomSet> minimal_sets(const std::vector<AtomSet>& family);

// Node-count guard for the enumeration procedures. The default cap keeps
// runaway inputs from hanging the process; callers that want more must say so.
struct SearchBudget {
  static constexpr std::uint64_t kDefaultCap = std::uint64_t(1) << 20;

  std::uint64_t cap = kDefaultCap;
  std::uint64_t used = 0;

  void tick() {
    if (++used > cap) throw ResourceExceeded("explored nodes exceeded cap of " + std::to_string(cap));
  }
};

}  // namespace causerep
