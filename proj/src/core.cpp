#include "causerep/core.hpp"

#include <algorithm>

namespace causerep {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ConflictingTag: return "ConflictingTag";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::NotEndogenous: return "NotEndogenous";
    case ErrorKind::NotInInstance: return "NotInInstance";
    case ErrorKind::QueryNotSatisfied: return "QueryNotSatisfied";
    case ErrorKind::ObservationAbsent: return "ObservationAbsent";
    case ErrorKind::InconsistentPackage: return "InconsistentPackage";
    case ErrorKind::PartitionedInstance: return "PartitionedInstance";
    case ErrorKind::ResourceExceeded: return "ResourceExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadArgument: return "BadArgument";
  }
  return "Error";
}

std::string GroundAtom::str() const {
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ",";
    out += args[i].symbol;
  }
  out += ")";
  return out;
}

std::string to_string(const AtomSet& atoms) {
  std::string out = "{";
  bool first = true;
  for (const auto& atom : atoms) {
    if (!first) out += ", ";
    out += atom.str();
    first = false;
  }
  out += "}";
  return out;
}

void Schema::declare(const std::string& name, std::size_t arity) {
  auto [it, inserted] = arities_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw Error(ErrorKind::ArityMismatch,
                "predicate " + name + " used with arity " + std::to_string(arity) +
                    " but declared with arity " + std::to_string(it->second));
  }
}

std::optional<std::size_t> Schema::arity_of(const std::string& name) const {
  auto it = arities_.find(name);
  if (it == arities_.end()) return std::nullopt;
  return it->second;
}

std::vector<PredicateSig> Schema::signatures() const {
  std::vector<PredicateSig> sigs;
  sigs.reserve(arities_.size());
  for (const auto& [name, arity] : arities_) sigs.push_back({name, arity});
  return sigs;
}

Instance::Instance(AtomSet endogenous, AtomSet exogenous)
    : endo_(std::move(endogenous)), exo_(std::move(exogenous)) {
  for (const auto& atom : exo_) {
    if (endo_.count(atom)) throw Error(ErrorKind::ConflictingTag, atom.str() + " tagged both ways");
  }
}

AtomSet Instance::atoms() const {
  AtomSet all = endo_;
  all.insert(exo_.begin(), exo_.end());
  return all;
}

Schema Instance::schema() const {
  Schema schema;
  for (const auto& atom : atoms()) schema.declare(atom.predicate, atom.arity());
  return schema;
}

Instance Instance::all_endogenous() const { return Instance(atoms(), {}); }

std::string Instance::snapshot_id() const {
  // FNV-1a over the canonical rendering, endogenous part first.
  std::uint64_t hash = 1469598103934665603ull;
  auto mix = [&hash](const std::string& text) {
    for (unsigned char c : text) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  };
  for (const auto& atom : endo_) mix(atom.str() + ";");
  mix("|");
  for (const auto& atom : exo_) mix(atom.str() + ";");
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

Instance make_instance(const std::vector<std::pair<GroundAtom, Tag>>& atoms) {
  Schema schema;
  AtomSet endo;
  AtomSet exo;
  for (const auto& [atom, tag] : atoms) {
    schema.declare(atom.predicate, atom.arity());
    (tag == Tag::Endogenous ? endo : exo).insert(atom);
  }
  for (const auto& atom : exo) {
    if (endo.count(atom)) throw Error(ErrorKind::ConflictingTag, atom.str() + " tagged both endogenous and exogenous");
  }
  return Instance(std::move(endo), std::move(exo));
}

Instance delete_atoms(const Instance& db, const AtomSet& removed) {
  AtomSet endo;
  AtomSet exo;
  for (const auto& atom : db.endogenous()) {
    if (!removed.count(atom)) endo.insert(atom);
  }
  for (const auto& atom : db.exogenous()) {
    if (!removed.count(atom)) exo.insert(atom);
  }
  return Instance(std::move(endo), std::move(exo));
}

AtomSet symmetric_difference(const Instance& a, const Instance& b) {
  const AtomSet lhs = a.atoms();
  const AtomSet rhs = b.atoms();
  AtomSet out;
  std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                std::inserter(out, out.end()));
  return out;
}

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
  AtomSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

AtomSet set_difference(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

AtomSet set_intersection(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool is_subset(const AtomSet& a, const AtomSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<AtomSet> minimal_sets(const std::vector<AtomSet>& family) {
  std::vector<AtomSet> sorted = family;
  std::sort(sorted.begin(), sorted.end(), [](const AtomSet& a, const AtomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  // Ascending by size, so every potential subset of a candidate has already
  // been kept (or was itself dominated by a kept set). Equal sets collapse.
  std::vector<AtomSet> kept;
  for (const auto& candidate : sorted) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const AtomSet& k) { return is_subset(k, candidate); });
    if (!dominated) kept.push_back(candidate);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace causerep
