#include "causerep/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "causerep/bridge.hpp"
#include "causerep/causality.hpp"
#include "causerep/crosscheck.hpp"
#include "causerep/diagnosis.hpp"
#include "causerep/facts.hpp"
#include "causerep/json_io.hpp"
#include "causerep/repairs.hpp"

namespace causerep {

namespace {

struct RunConfig {
  std::string facts_path;
  std::string query_arg;
  std::vector<std::string> dc_args;
  std::string atom_arg;
  std::string kind = "s";
  std::string semantics = "s";
  bool json = false;
  bool show_sd = false;
  bool timings = false;
  std::uint64_t node_cap = SearchBudget::kDefaultCap;
  std::size_t oracle_budget = 12;
};

std::string load_arg(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  const std::string path = value.substr(1);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<DenialConstraint> load_dcs(const RunConfig& cfg) {
  std::vector<DenialConstraint> out;
  for (const auto& arg : cfg.dc_args) {
    for (auto& dc : parse_dcs(load_arg(arg))) out.push_back(std::move(dc));
  }
  return out;
}

struct Command {
  RunConfig cfg;
  std::ostream& out;
  SearchBudget budget;

  explicit Command(RunConfig config, std::ostream& stream) : cfg(std::move(config)), out(stream) {
    budget.cap = cfg.node_cap;
  }

  Instance facts() const { return load_facts_file(cfg.facts_path); }
  ConjunctiveQuery query() const { return parse_query(load_arg(cfg.query_arg)); }
  GroundAtom atom() const { return parse_ground_atom(cfg.atom_arg); }

  void emit(const std::string& command, Json result, const std::string& human) {
    if (!cfg.json) {
      out << human;
      return;
    }
    Json doc;
    Json input;
    input["command"] = command;
    input["facts"] = cfg.facts_path;
    if (!cfg.query_arg.empty()) input["query"] = query().str();
    if (!cfg.dc_args.empty()) {
      Json dcs = Json::array();
      for (const auto& dc : load_dcs(cfg)) dcs.push_back(dc.str());
      input["dcs"] = dcs;
    }
    if (!cfg.atom_arg.empty()) input["atom"] = atom().str();
    doc["input"] = input;
    doc["result"] = std::move(result);
    doc["stats"] = Json{{"nodes", budget.used}};
    out << doc.dump(2) << "\n";
  }
};

std::string human_causes(const CauseSet& causes, bool query_holds) {
  std::ostringstream out;
  out << "query holds: " << (query_holds ? "yes" : "no") << "\n";
  out << causes.reports.size() << " actual cause(s)\n";
  for (const auto& report : causes.reports) {
    out << "  " << report.cause.str() << "  responsibility " << report.responsibility.str()
        << "  contingencies";
    for (const auto& gamma : report.minimal_contingencies) out << " " << to_string(gamma);
    out << "\n";
  }
  return out.str();
}

std::string human_repairs(const RepairSet& repairs) {
  std::ostringstream out;
  out << repairs.repairs.size() << " " << (repairs.kind == RepairKind::Subset ? "s" : "c")
      << "-repair(s)\n";
  for (const auto& repair : repairs.repairs) {
    out << "  delete " << to_string(repair.deleted) << " -> " << to_string(repair.instance.atoms()) << "\n";
  }
  return out.str();
}

int cmd_check(Command& cmd) {
  const Instance db = cmd.facts();
  const auto dcs = load_dcs(cmd.cfg);
  std::vector<std::string> violated;
  for (const auto& dc : dcs) {
    if (evaluate_bcq(db, violation_view(dc), &cmd.budget)) violated.push_back(dc.str());
  }
  Json result;
  result["consistent"] = violated.empty();
  result["violated"] = violated;
  std::ostringstream human;
  human << (violated.empty() ? "consistent" : "inconsistent") << "\n";
  for (const auto& dc : violated) human << "  violated: " << dc << "\n";
  cmd.emit("check", result, human.str());
  return 0;
}

int cmd_eval(Command& cmd) {
  const Instance db = cmd.facts();
  const ConjunctiveQuery q = cmd.query();
  Json result;
  std::ostringstream human;
  if (q.boolean()) {
    const bool value = evaluate_bcq(db, q, &cmd.budget);
    result["boolean"] = true;
    result["value"] = value;
    human << (value ? "true" : "false") << "\n";
  } else {
    const auto rows = answers(db, q, &cmd.budget);
    result["boolean"] = false;
    Json list = Json::array();
    for (const auto& row : rows) {
      Json tuple = Json::array();
      for (const auto& c : row) tuple.push_back(c.symbol);
      list.push_back(tuple);
    }
    result["answers"] = list;
    human << rows.size() << " answer(s)\n";
    for (const auto& row : rows) {
      human << "  (";
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) human << ",";
        human << row[i].symbol;
      }
      human << ")\n";
    }
  }
  cmd.emit("eval", result, human.str());
  return 0;
}

int cmd_causes(Command& cmd) {
  const Instance db = cmd.facts();
  const ConjunctiveQuery q = cmd.query();
  const bool holds = evaluate_bcq(db, q, &cmd.budget);
  const CauseSet causes = actual_causes(db, q, &cmd.budget);
  Json result = to_json(causes);
  result["query_holds"] = holds;
  cmd.emit("causes", result, human_causes(causes, holds));
  return 0;
}

int cmd_responsibility(Command& cmd) {
  const Instance db = cmd.facts();
  const Rational rho = responsibility(db, cmd.query(), cmd.atom(), &cmd.budget);
  Json result;
  result["atom"] = cmd.atom().str();
  result["responsibility"] = to_json(rho);
  cmd.emit("responsibility", result, cmd.atom().str() + "  responsibility " + rho.str() + "\n");
  return 0;
}

int cmd_repairs(Command& cmd) {
  const Instance db = cmd.facts();
  std::vector<DenialConstraint> dcs = load_dcs(cmd.cfg);
  if (dcs.empty()) {
    if (cmd.cfg.query_arg.empty())
      throw Error(ErrorKind::BadArgument, "repairs needs --dc, or --query to repair against kappa(Q)");
    dcs.push_back(dc_of_query(cmd.query()));
  }
  const RepairSet repairs = cmd.cfg.kind == "c" ? c_repairs(db, dcs, &cmd.budget)
                                                : s_repairs(db, dcs, &cmd.budget);
  cmd.emit("repairs", to_json(repairs), human_repairs(repairs));
  return 0;
}

int cmd_cqa(Command& cmd) {
  const Instance db = cmd.facts();
  const auto dcs = load_dcs(cmd.cfg);
  const GroundAtom atom = cmd.atom();
  const RepairSemantics semantics =
      cmd.cfg.semantics == "c" ? RepairSemantics::Cardinality : RepairSemantics::Subset;
  const bool value = consistent_answer_ground(db, dcs, atom, semantics, &cmd.budget);
  Json result;
  result["atom"] = atom.str();
  result["semantics"] = cmd.cfg.semantics;
  result["consistently_true"] = value;
  cmd.emit("cqa", result,
           atom.str() + (value ? " is consistently true\n" : " is not consistently true\n"));
  return 0;
}

int cmd_diagnose(Command& cmd) {
  const Instance db = cmd.facts();
  const DiagnosisProblem problem = build_diagnosis_problem(db, cmd.query(), &cmd.budget);
  const std::vector<Diagnosis> diagnoses = minimal_diagnoses(problem, &cmd.budget);
  const CauseSet causes = causes_from_diagnoses(problem, &cmd.budget);
  Json result;
  result["diagnoses"] = to_json(diagnoses);
  result["causes"] = to_json(causes)["causes"];
  if (cmd.cfg.show_sd) result["sd"] = to_json(problem.system_description);
  std::ostringstream human;
  human << diagnoses.size() << " minimal diagnosis/es\n";
  for (const auto& d : diagnoses) human << "  " << to_string(d.abnormal) << "\n";
  human << human_causes(causes, true);
  if (cmd.cfg.show_sd) human << "system description:\n" << problem.system_description.render();
  cmd.emit("diagnose", result, human.str());
  return 0;
}

int cmd_crosscheck(Command& cmd) {
  const Instance db = cmd.facts();
  std::optional<ConjunctiveQuery> query;
  if (!cmd.cfg.query_arg.empty()) query = cmd.query();
  const auto dcs = load_dcs(cmd.cfg);
  if (!query && dcs.empty())
    throw Error(ErrorKind::BadArgument, "crosscheck needs --query and/or --dc");
  const CrosscheckReport report =
      crosscheck(db, query, dcs, oracle::OracleBudget{cmd.cfg.oracle_budget}, &cmd.budget);
  std::ostringstream human;
  for (const auto& check : report.checks) {
    human << (check.applicable ? (check.pass ? "PASS" : "FAIL") : "SKIP") << "  " << check.name;
    if (!check.detail.empty()) human << "  [" << check.detail << "]";
    human << "\n";
  }
  human << (report.all_passed() ? "all applicable checks passed" : "some checks FAILED") << "\n";
  cmd.emit("crosscheck", to_json(report), human.str());
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"causes, repairs and diagnoses for query answers over relational facts"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool with_query, bool with_dc) {
    sub->add_option("--facts", cfg.facts_path, "facts file")->required();
    if (with_query) sub->add_option("--query", cfg.query_arg, "query rule, or @file");
    if (with_dc) sub->add_option("--dc", cfg.dc_args, "denial constraint rule(s), or @file (repeatable)");
    sub->add_flag("--json", cfg.json, "emit one JSON document");
    sub->add_option("--budget", cfg.node_cap, "explored-node cap for enumerations");
    sub->add_flag("--timings", cfg.timings, "report wall time on stderr");
    return sub;
  };

  auto* check = add_common(app.add_subcommand("check", "consistency wrt denial constraints"), false, true);
  auto* eval = add_common(app.add_subcommand("eval", "evaluate a query"), true, false);
  auto* causes = add_common(app.add_subcommand("causes", "actual causes with contingencies"), true, false);
  auto* resp = add_common(app.add_subcommand("responsibility", "responsibility of one tuple"), true, false);
  resp->add_option("--atom", cfg.atom_arg, "ground atom")->required();
  auto* repairs = add_common(app.add_subcommand("repairs", "subset or cardinality repairs"), true, true);
  repairs->add_option("--kind", cfg.kind, "s (subset) or c (cardinality)")
      ->check(CLI::IsMember({"s", "c"}));
  auto* cqa = add_common(app.add_subcommand("cqa", "consistent answer for a ground atom"), false, true);
  cqa->add_option("--atom", cfg.atom_arg, "ground atom")->required();
  cqa->add_option("--semantics", cfg.semantics, "s (subset) or c (cardinality) repairs")
      ->check(CLI::IsMember({"s", "c"}));
  auto* diagnose = add_common(app.add_subcommand("diagnose", "minimal diagnoses for the observation"), true, false);
  diagnose->add_flag("--show-sd", cfg.show_sd, "include the rendered system description");
  auto* crosschk = add_common(app.add_subcommand("crosscheck", "verify the reductions on this input"), true, true);
  crosschk->add_option("--oracle-budget", cfg.oracle_budget, "max atoms for brute-force enumeration");

  for (auto* sub : {eval, causes, resp, diagnose}) sub->get_option("--query")->required();
  check->get_option("--dc")->required();
  cqa->get_option("--dc")->required();

  std::vector<const char*> argv;
  argv.push_back("causerep");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    Command cmd(cfg, out);
    if (check->parsed()) code = cmd_check(cmd);
    else if (eval->parsed()) code = cmd_eval(cmd);
    else if (causes->parsed()) code = cmd_causes(cmd);
    else if (resp->parsed()) code = cmd_responsibility(cmd);
    else if (repairs->parsed()) code = cmd_repairs(cmd);
    else if (cqa->parsed()) code = cmd_cqa(cmd);
    else if (diagnose->parsed()) code = cmd_diagnose(cmd);
    else if (crosschk->parsed()) code = cmd_crosscheck(cmd);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = (e.kind() == ErrorKind::ResourceExceeded || e.kind() == ErrorKind::BudgetExceeded) ? 3 : 2;
  }
  if (cfg.timings) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    err << "wall_ms: " << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  }
  return code;
}

}  // namespace causerep
