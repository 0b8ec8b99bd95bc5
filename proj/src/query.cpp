#include "causerep/query.hpp"

#include <algorithm>
#include <cctype>

namespace causerep {

namespace {

bool plain_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::islower(static_cast<unsigned char>(s[0])) || std::isdigit(static_cast<unsigned char>(s[0])) ||
        s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::string render_constant(const std::string& symbol) {
  if (plain_symbol(symbol)) return symbol;
  std::string out = "\"";
  for (char c : symbol) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

bool is_variable(const Term& term) { return std::holds_alternative<Variable>(term); }

std::string term_str(const Term& term) {
  if (const auto* var = std::get_if<Variable>(&term)) return var->name;
  return render_constant(std::get<Constant>(term).symbol);
}

std::string QueryAtom::str() const {
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ",";
    out += term_str(args[i]);
  }
  return out + ")";
}

std::vector<std::string> ConjunctiveQuery::variables() const {
  std::vector<std::string> order;
  for (const auto& atom : atoms) {
    for (const auto& term : atom.args) {
      if (const auto* var = std::get_if<Variable>(&term)) {
        if (std::find(order.begin(), order.end(), var->name) == order.end()) order.push_back(var->name);
      }
    }
  }
  return order;
}

std::string ConjunctiveQuery::str() const {
  std::string out = "q(";
  for (std::size_t i = 0; i < free_vars.size(); ++i) {
    if (i > 0) out += ",";
    out += free_vars[i];
  }
  out += ") :- ";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += ", ";
    out += atoms[i].str();
  }
  return out + ".";
}

std::string DenialConstraint::str() const {
  std::string out = ":- ";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += ", ";
    out += atoms[i].str();
  }
  return out + ".";
}

// --- tokenizer --------------------------------------------------------------

namespace {

enum class TokKind { Ident, Quoted, LParen, RParen, Comma, Arrow, Dot, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string text) : text_(std::move(text)) {}

  Token next() {
    skip_blank();
    const std::size_t line = line_, col = col_;
    if (pos_ >= text_.size()) return {TokKind::End, "", line, col};
    const char c = text_[pos_];
    if (c == '(') return advance(), Token{TokKind::LParen, "(", line, col};
    if (c == ')') return advance(), Token{TokKind::RParen, ")", line, col};
    if (c == ',') return advance(), Token{TokKind::Comma, ",", line, col};
    if (c == '.') return advance(), Token{TokKind::Dot, ".", line, col};
    if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      advance();
      advance();
      return {TokKind::Arrow, ":-", line, col};
    }
    if (c == '"') return quoted(line, col);
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return ident(line, col);
    if (c == '=' || c == '<' || c == '>' || c == '!')
      throw SyntaxError("built-in comparisons are not supported", line, col);
    throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token quoted(std::size_t line, std::size_t col) {
    advance();  // opening quote
    std::string value;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
      value += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size()) throw SyntaxError("unterminated quoted constant", line, col);
    advance();  // closing quote
    if (value.empty()) throw SyntaxError("empty quoted constant", line, col);
    return {TokKind::Quoted, value, line, col};
  }

  Token ident(std::size_t line, std::size_t col) {
    std::string value;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      value += text_[pos_];
      advance();
    }
    return {TokKind::Ident, value, line, col};
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class RuleParser {
 public:
  RuleParser(std::string text, const Schema* schema) : lexer_(std::move(text)), schema_(schema) { shift(); }

  bool at_end() const { return tok_.kind == TokKind::End; }

  struct Rule {
    bool has_head = false;
    std::string head_name;
    std::vector<std::string> head_vars;
    std::vector<QueryAtom> body;
  };

  Rule rule() {
    Rule out;
    if (tok_.kind == TokKind::Ident) {
      out.has_head = true;
      out.head_name = tok_.text;
      shift();
      expect(TokKind::LParen, "'('");
      if (tok_.kind != TokKind::RParen) {
        out.head_vars.push_back(head_var());
        while (tok_.kind == TokKind::Comma) {
          shift();
          out.head_vars.push_back(head_var());
        }
      }
      expect(TokKind::RParen, "')'");
    }
    expect(TokKind::Arrow, "':-'");
    out.body.push_back(atom());
    while (tok_.kind == TokKind::Comma) {
      shift();
      out.body.push_back(atom());
    }
    expect(TokKind::Dot, "'.'");
    validate(out);
    return out;
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  void expect(TokKind kind, const char* what) {
    if (tok_.kind != kind)
      throw SyntaxError(std::string("expected ") + what + ", found '" + tok_.text + "'", tok_.line, tok_.column);
    shift();
  }

  std::string head_var() {
    if (tok_.kind != TokKind::Ident || !std::isupper(static_cast<unsigned char>(tok_.text[0])))
      throw SyntaxError("head arguments must be variables", tok_.line, tok_.column);
    std::string name = tok_.text;
    shift();
    return name;
  }

  Term term() {
    if (tok_.kind == TokKind::Quoted) {
      Constant c{tok_.text};
      shift();
      return c;
    }
    if (tok_.kind != TokKind::Ident)
      throw SyntaxError("expected a term, found '" + tok_.text + "'", tok_.line, tok_.column);
    std::string text = tok_.text;
    shift();
    if (std::isupper(static_cast<unsigned char>(text[0]))) return Variable{text};
    return Constant{text};
  }

  QueryAtom atom() {
    if (tok_.kind != TokKind::Ident)
      throw SyntaxError("expected a predicate name, found '" + tok_.text + "'", tok_.line, tok_.column);
    QueryAtom out;
    out.predicate = tok_.text;
    shift();
    expect(TokKind::LParen, "'('");
    out.args.push_back(term());
    while (tok_.kind == TokKind::Comma) {
      shift();
      out.args.push_back(term());
    }
    expect(TokKind::RParen, "')'");
    if (schema_) {
      auto arity = schema_->arity_of(out.predicate);
      if (!arity) throw Error(ErrorKind::UnknownPredicate, out.predicate + " is not in the schema");
      if (*arity != out.args.size())
        throw Error(ErrorKind::ArityMismatch, out.predicate + " expects " + std::to_string(*arity) +
                                                  " argument(s), got " + std::to_string(out.args.size()));
    }
    local_.declare(out.predicate, out.args.size());
    return out;
  }

  void validate(const Rule& rule) {
    std::vector<std::string> body_vars;
    for (const auto& a : rule.body) {
      for (const auto& t : a.args) {
        if (const auto* var = std::get_if<Variable>(&t)) body_vars.push_back(var->name);
      }
    }
    for (const auto& head_var : rule.head_vars) {
      if (std::find(body_vars.begin(), body_vars.end(), head_var) == body_vars.end())
        throw Error(ErrorKind::BadArgument, "head variable " + head_var + " does not occur in the body");
    }
  }

  Lexer lexer_;
  Token tok_{TokKind::End, "", 0, 0};
  const Schema* schema_;
  Schema local_;
};

}  // namespace

ConjunctiveQuery parse_query(const std::string& text, const Schema* schema) {
  RuleParser parser(text, schema);
  auto rule = parser.rule();
  if (!parser.at_end()) throw SyntaxError("trailing input after rule", 0, 0);
  if (!rule.has_head) throw SyntaxError("query needs a head; use parse_dc for headless rules", 1, 1);
  return ConjunctiveQuery{rule.head_vars, rule.body};
}

DenialConstraint parse_dc(const std::string& text, const Schema* schema) {
  RuleParser parser(text, schema);
  auto rule = parser.rule();
  if (!parser.at_end()) throw SyntaxError("trailing input after rule", 0, 0);
  if (rule.has_head) throw SyntaxError("a denial constraint is a headless rule", 1, 1);
  return DenialConstraint{rule.body};
}

std::vector<DenialConstraint> parse_dcs(const std::string& text, const Schema* schema) {
  RuleParser parser(text, schema);
  std::vector<DenialConstraint> out;
  while (!parser.at_end()) {
    auto rule = parser.rule();
    if (rule.has_head) throw SyntaxError("a denial constraint is a headless rule", 1, 1);
    out.push_back(DenialConstraint{rule.body});
  }
  if (out.empty()) throw SyntaxError("no denial constraint found", 1, 1);
  return out;
}

GroundAtom parse_ground_atom(const std::string& text, const Schema* schema) {
  // Reuse the rule machinery by wrapping the atom into a headless rule.
  RuleParser parser(":- " + text + (text.find('.') == std::string::npos ? "." : ""), schema);
  auto rule = parser.rule();
  if (rule.body.size() != 1) throw SyntaxError("expected a single ground atom", 1, 1);
  GroundAtom out;
  out.predicate = rule.body[0].predicate;
  for (const auto& term : rule.body[0].args) {
    if (is_variable(term)) throw SyntaxError("ground atom must not contain variables", 1, 1);
    out.args.push_back(std::get<Constant>(term));
  }
  return out;
}

// --- conversions ----------------------------------------------------------

DenialConstraint dc_of_query(const ConjunctiveQuery& query) {
  if (!query.boolean()) throw Error(ErrorKind::NotBoolean, "kappa(Q) requires a boolean query");
  return DenialConstraint{query.atoms};
}

ConjunctiveQuery violation_view(const DenialConstraint& dc) { return ConjunctiveQuery{{}, dc.atoms}; }

DenialConstraint ground_answer_dc(const ConjunctiveQuery& query, const std::vector<Constant>& binding) {
  if (binding.size() != query.free_vars.size())
    throw Error(ErrorKind::ArityMismatch, "answer has " + std::to_string(binding.size()) +
                                              " constant(s) but the query has " +
                                              std::to_string(query.free_vars.size()) + " free variable(s)");
  std::map<std::string, Constant> subst;
  for (std::size_t i = 0; i < binding.size(); ++i) subst.emplace(query.free_vars[i], binding[i]);
  DenialConstraint out;
  for (const auto& atom : query.atoms) {
    QueryAtom grounded{atom.predicate, {}};
    for (const auto& term : atom.args) {
      if (const auto* var = std::get_if<Variable>(&term); var && subst.count(var->name)) {
        grounded.args.emplace_back(subst.at(var->name));
      } else {
        grounded.args.push_back(term);
      }
    }
    out.atoms.push_back(std::move(grounded));
  }
  return out;
}

// --- evaluation -----------------------------------------------------------

namespace {

using Env = std::map<std::string, Constant>;

struct Matcher {
  std::vector<const QueryAtom*> atoms;                       // join order
  std::vector<const std::vector<GroundAtom>*> relations;     // parallel to atoms
  SearchBudget* budget;

  // Returns false from the visitor to stop the enumeration.
  template <typename Visitor>
  bool enumerate(std::size_t depth, Env& env, Visitor&& visit) {
    if (depth == atoms.size()) return visit(env);
    const QueryAtom& atom = *atoms[depth];
    for (const GroundAtom& tuple : *relations[depth]) {
      if (budget) budget->tick();
      if (tuple.args.size() != atom.args.size()) continue;
      Env saved = env;
      bool ok = true;
      for (std::size_t i = 0; i < atom.args.size() && ok; ++i) {
        if (const auto* var = std::get_if<Variable>(&atom.args[i])) {
          auto [it, inserted] = env.emplace(var->name, tuple.args[i]);
          ok = inserted || it->second == tuple.args[i];
        } else {
          ok = std::get<Constant>(atom.args[i]) == tuple.args[i];
        }
      }
      if (ok && !enumerate(depth + 1, env, visit)) return false;
      env = std::move(saved);
    }
    return true;
  }
};

Matcher make_matcher(const std::map<std::string, std::vector<GroundAtom>>& index,
                     const ConjunctiveQuery& query, SearchBudget* budget,
                     const std::vector<GroundAtom>& empty_relation) {
  Matcher m;
  m.budget = budget;
  std::vector<std::size_t> order(query.atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto size_of = [&](std::size_t i) {
    auto it = index.find(query.atoms[i].predicate);
    return it == index.end() ? std::size_t(0) : it->second.size();
  };
  // Smallest relation first; ties keep the textual atom order.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return size_of(a) < size_of(b); });
  for (std::size_t i : order) {
    m.atoms.push_back(&query.atoms[i]);
    auto it = index.find(query.atoms[i].predicate);
    m.relations.push_back(it == index.end() ? &empty_relation : &it->second);
  }
  return m;
}

std::map<std::string, std::vector<GroundAtom>> build_index(const Instance& db) {
  std::map<std::string, std::vector<GroundAtom>> index;
  for (const auto& atom : db.atoms()) index[atom.predicate].push_back(atom);
  return index;
}

AtomSet image_of(const ConjunctiveQuery& query, const Env& env) {
  AtomSet image;
  for (const auto& atom : query.atoms) {
    GroundAtom ground{atom.predicate, {}};
    for (const auto& term : atom.args) {
      if (const auto* var = std::get_if<Variable>(&term)) {
        ground.args.push_back(env.at(var->name));
      } else {
        ground.args.push_back(std::get<Constant>(term));
      }
    }
    image.insert(std::move(ground));
  }
  return image;
}

void require_boolean(const ConjunctiveQuery& query) {
  if (!query.boolean()) throw Error(ErrorKind::NotBoolean, "operation requires a boolean query");
}

}  // namespace

bool evaluate_bcq(const Instance& db, const ConjunctiveQuery& query, SearchBudget* budget) {
  require_boolean(query);
  const auto index = build_index(db);
  const std::vector<GroundAtom> empty;
  Matcher m = make_matcher(index, query, budget, empty);
  bool satisfied = false;
  Env env;
  m.enumerate(0, env, [&](const Env&) {
    satisfied = true;
    return false;
  });
  return satisfied;
}

std::set<std::vector<Constant>> answers(const Instance& db, const ConjunctiveQuery& query,
                                        SearchBudget* budget) {
  const auto index = build_index(db);
  const std::vector<GroundAtom> empty;
  Matcher m = make_matcher(index, query, budget, empty);
  std::set<std::vector<Constant>> out;
  Env env;
  m.enumerate(0, env, [&](const Env& full) {
    std::vector<Constant> row;
    row.reserve(query.free_vars.size());
    for (const auto& name : query.free_vars) row.push_back(full.at(name));
    out.insert(std::move(row));
    return true;
  });
  return out;
}

std::vector<Witness> witnesses(const Instance& db, const ConjunctiveQuery& query, bool minimal_only,
                               SearchBudget* budget) {
  require_boolean(query);
  const auto index = build_index(db);
  const std::vector<GroundAtom> empty;
  Matcher m = make_matcher(index, query, budget, empty);
  std::vector<Witness> all;
  Env env;
  m.enumerate(0, env, [&](const Env& full) {
    all.push_back(Witness{full, image_of(query, full)});
    return true;
  });
  std::sort(all.begin(), all.end());
  if (!minimal_only) return all;

  std::vector<AtomSet> images;
  images.reserve(all.size());
  for (const auto& w : all) images.push_back(w.image);
  const std::vector<AtomSet> kept = minimal_sets(images);
  std::vector<Witness> out;
  for (const auto& image : kept) {
    // `all` is sorted, so the first hit carries the least assignment.
    for (const auto& w : all) {
      if (w.image == image) {
        out.push_back(w);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomSet> minimal_witness_images(const Instance& db, const ConjunctiveQuery& query,
                                            SearchBudget* budget) {
  require_boolean(query);
  const auto index = build_index(db);
  const std::vector<GroundAtom> empty;
  Matcher m = make_matcher(index, query, budget, empty);
  std::set<AtomSet> images;
  Env env;
  m.enumerate(0, env, [&](const Env& full) {
    images.insert(image_of(query, full));
    return true;
  });
  return minimal_sets(std::vector<AtomSet>(images.begin(), images.end()));
}

}  // namespace causerep
