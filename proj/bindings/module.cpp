#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "causerep/bridge.hpp"
#include "causerep/causality.hpp"
#include "causerep/crosscheck.hpp"
#include "causerep/diagnosis.hpp"
#include "causerep/facts.hpp"
#include "causerep/oracle.hpp"
#include "causerep/repairs.hpp"

namespace py = pybind11;
using namespace causerep;

namespace {

std::vector<AtomSet> family_to_list(const AtomSetFamily& family) {
  return std::vector<AtomSet>(family.begin(), family.end());
}

std::vector<AtomSet> diagnoses_to_sets(const std::vector<Diagnosis>& diagnoses) {
  std::vector<AtomSet> out;
  out.reserve(diagnoses.size());
  for (const auto& d : diagnoses) out.push_back(d.abnormal);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Causes, repairs and diagnoses for conjunctive-query answers over relational facts";

  py::register_exception<Error>(m, "CauserepError");

  py::class_<Constant>(m, "Constant")
      .def(py::init<std::string>())
      .def_readonly("symbol", &Constant::symbol)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Constant& c) { return py::hash(py::str(c.symbol)); })
      .def("__repr__", [](const Constant& c) { return c.symbol; });

  py::class_<GroundAtom>(m, "GroundAtom")
      .def(py::init([](const std::string& text) { return parse_ground_atom(text); }))
      .def_readonly("predicate", &GroundAtom::predicate)
      .def_readonly("args", &GroundAtom::args)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const GroundAtom& a) { return py::hash(py::str(a.str())); })
      .def("__str__", &GroundAtom::str)
      .def("__repr__", &GroundAtom::str);

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("endogenous", &Instance::endogenous)
      .def_property_readonly("exogenous", &Instance::exogenous)
      .def("atoms", &Instance::atoms)
      .def("all_endogenous", &Instance::all_endogenous)
      .def("snapshot_id", &Instance::snapshot_id)
      .def("__len__", &Instance::size)
      .def("__contains__", &Instance::contains)
      .def("__repr__", [](const Instance& db) {
        return "Instance(endogenous=" + to_string(db.endogenous()) +
               ", exogenous=" + to_string(db.exogenous()) + ")";
      });

  py::class_<ConjunctiveQuery>(m, "ConjunctiveQuery")
      .def_readonly("free_vars", &ConjunctiveQuery::free_vars)
      .def_property_readonly("boolean", &ConjunctiveQuery::boolean)
      .def("__str__", &ConjunctiveQuery::str)
      .def("__repr__", &ConjunctiveQuery::str);

  py::class_<DenialConstraint>(m, "DenialConstraint")
      .def("__str__", &DenialConstraint::str)
      .def("__repr__", &DenialConstraint::str);

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__float__", &Rational::value)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__", &Rational::str);

  py::class_<CauseReport>(m, "CauseReport")
      .def_readonly("cause", &CauseReport::cause)
      .def_readonly("responsibility", &CauseReport::responsibility)
      .def_property_readonly(
          "contingencies",
          [](const CauseReport& r) { return family_to_list(r.minimal_contingencies); })
      .def("__repr__", [](const CauseReport& r) {
        return r.cause.str() + " (responsibility " + r.responsibility.str() + ")";
      });

  py::class_<CauseSet>(m, "CauseSet")
      .def_readonly("reports", &CauseSet::reports)
      .def_readonly("instance_id", &CauseSet::instance_id)
      .def("causes", &CauseSet::causes)
      .def("__len__", [](const CauseSet& cs) { return cs.reports.size(); })
      .def("__iter__",
           [](const CauseSet& cs) { return py::make_iterator(cs.reports.begin(), cs.reports.end()); },
           py::keep_alive<0, 1>());

  py::class_<Repair>(m, "Repair")
      .def_readonly("instance", &Repair::instance)
      .def_readonly("deleted", &Repair::deleted)
      .def("__repr__", [](const Repair& r) { return "delete " + to_string(r.deleted); });

  py::class_<RepairSet>(m, "RepairSet")
      .def_readonly("repairs", &RepairSet::repairs)
      .def("deletions", &RepairSet::deletions)
      .def("__len__", [](const RepairSet& rs) { return rs.repairs.size(); })
      .def("__iter__",
           [](const RepairSet& rs) { return py::make_iterator(rs.repairs.begin(), rs.repairs.end()); },
           py::keep_alive<0, 1>());

  py::class_<SystemDescription>(m, "SystemDescription")
      .def_readonly("completion_axioms", &SystemDescription::completion_axioms)
      .def_readonly("unique_names", &SystemDescription::unique_names)
      .def_readonly("constraint_ext", &SystemDescription::constraint_ext)
      .def_readonly("inclusion_dependencies", &SystemDescription::inclusion_dependencies)
      .def_readonly("normality_defaults", &SystemDescription::normality_defaults)
      .def("render", &SystemDescription::render);

  py::class_<DiagnosisProblem>(m, "DiagnosisProblem")
      .def_readonly("instance", &DiagnosisProblem::instance)
      .def_readonly("query", &DiagnosisProblem::query)
      .def_readonly("system_description", &DiagnosisProblem::system_description);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("applicable", &CheckResult::applicable)
      .def_readonly("pass_", &CheckResult::pass)
      .def_readonly("detail", &CheckResult::detail)
      .def("__repr__", [](const CheckResult& r) {
        return (r.applicable ? (r.pass ? "PASS " : "FAIL ") : "SKIP ") + r.name;
      });

  // parsing
  m.def("parse_facts", &parse_facts, py::arg("text"));
  m.def("load_facts", &load_facts_file, py::arg("path"));
  m.def("parse_query", [](const std::string& text) { return parse_query(text); }, py::arg("text"));
  m.def("parse_dc", [](const std::string& text) { return parse_dc(text); }, py::arg("text"));
  m.def("atom", [](const std::string& text) { return parse_ground_atom(text); }, py::arg("text"));

  // query evaluation and conversions
  m.def("evaluate", [](const Instance& db, const ConjunctiveQuery& q) { return evaluate_bcq(db, q); });
  m.def("answers", [](const Instance& db, const ConjunctiveQuery& q) { return answers(db, q); });
  m.def("dc_of_query", &dc_of_query);
  m.def("violation_view", &violation_view);
  m.def("ground_answer_dc", &ground_answer_dc);

  // causes
  m.def("actual_causes",
        [](const Instance& db, const ConjunctiveQuery& q) { return actual_causes(db, q); });
  m.def("responsibility", [](const Instance& db, const ConjunctiveQuery& q, const GroundAtom& t) {
    return responsibility(db, q, t);
  });
  m.def("is_actual_cause", [](const Instance& db, const ConjunctiveQuery& q, const GroundAtom& t) {
    return is_actual_cause(db, q, t);
  });
  m.def("minimal_contingency_sets",
        [](const Instance& db, const ConjunctiveQuery& q, const GroundAtom& t) {
          return family_to_list(minimal_contingency_sets(db, q, t));
        });
  m.def("most_responsible_causes", [](const Instance& db, const ConjunctiveQuery& q) {
    return most_responsible_causes(db, q);
  });

  // repairs
  m.def("is_consistent", [](const Instance& db, const std::vector<DenialConstraint>& dcs) {
    return is_consistent(db, dcs);
  });
  m.def("s_repairs",
        [](const Instance& db, const std::vector<DenialConstraint>& dcs) { return s_repairs(db, dcs); });
  m.def("c_repairs",
        [](const Instance& db, const std::vector<DenialConstraint>& dcs) { return c_repairs(db, dcs); });
  m.def("consistent_answer",
        [](const Instance& db, const std::vector<DenialConstraint>& dcs, const GroundAtom& atom,
           const std::string& semantics) {
          return consistent_answer_ground(
              db, dcs, atom,
              semantics == "c" ? RepairSemantics::Cardinality : RepairSemantics::Subset);
        },
        py::arg("db"), py::arg("dcs"), py::arg("atom"), py::arg("semantics") = "s");
  m.def("minimal_hitting_sets",
        [](const std::vector<AtomSet>& collection) { return minimal_hitting_sets(collection); });

  // reductions
  m.def("causes_from_repairs",
        [](const Instance& db, const ConjunctiveQuery& q) { return causes_from_repairs(db, q); });
  m.def("c_repairs_from_mrc", [](const Instance& db, const DenialConstraint& dc) {
    return c_repairs_from_mrc(db, dc);
  });
  m.def("cqa_from_causes", [](const Instance& db, const DenialConstraint& dc, const GroundAtom& a) {
    return cqa_from_causes(db, dc, a);
  });
  m.def("repairs_from_causes", [](const Instance& db, const std::vector<DenialConstraint>& dcs) {
    return repairs_from_causes(db, dcs, make_cause_package(db, dcs));
  });

  // diagnosis
  m.def("build_diagnosis_problem", [](const Instance& db, const ConjunctiveQuery& q) {
    return build_diagnosis_problem(db, q);
  });
  m.def("minimal_diagnoses", [](const DiagnosisProblem& problem) {
    return diagnoses_to_sets(minimal_diagnoses(problem));
  });
  m.def("causes_from_diagnoses",
        [](const DiagnosisProblem& problem) { return causes_from_diagnoses(problem); });

  // verification
  m.def("crosscheck",
        [](const Instance& db, const std::optional<ConjunctiveQuery>& q,
           const std::vector<DenialConstraint>& dcs) { return crosscheck(db, q, dcs).checks; },
        py::arg("db"), py::arg("query") = std::nullopt,
        py::arg("dcs") = std::vector<DenialConstraint>{});

  m.attr("__version__") = "0.1.0";
}
