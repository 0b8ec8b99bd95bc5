#include "causerep/facts.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace causerep {

namespace {

struct LineScanner {
  const std::string& line;
  std::size_t lineno;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }

  bool done() {
    skip_space();
    return pos >= line.size();
  }

  char peek() {
    skip_space();
    return pos < line.size() ? line[pos] : '\0';
  }

  void expect(char c) {
    skip_space();
    if (pos >= line.size() || line[pos] != c)
      throw SyntaxError(std::string("expected '") + c + "'", lineno, pos + 1);
    ++pos;
  }

  std::string ident() {
    skip_space();
    const std::size_t start = pos;
    while (pos < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
      ++pos;
    if (pos == start) throw SyntaxError("expected an identifier", lineno, pos + 1);
    return line.substr(start, pos - start);
  }

  std::string constant() {
    skip_space();
    if (pos < line.size() && line[pos] == '"') {
      ++pos;
      std::string value;
      while (pos < line.size() && line[pos] != '"') {
        if (line[pos] == '\\' && pos + 1 < line.size()) ++pos;
        value += line[pos++];
      }
      if (pos >= line.size()) throw SyntaxError("unterminated quoted constant", lineno, pos + 1);
      ++pos;
      if (value.empty()) throw SyntaxError("empty quoted constant", lineno, pos + 1);
      return value;
    }
    std::string value = ident();
    if (std::isupper(static_cast<unsigned char>(value[0])))
      throw SyntaxError("facts take constants, not variables (" + value + ")", lineno, pos);
    return value;
  }
};

}  // namespace

Instance parse_facts(const std::string& text) {
  std::vector<std::pair<GroundAtom, Tag>> atoms;
  Tag section_default = Tag::Endogenous;

  std::istringstream stream(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    if (const auto cut = raw.find('%'); cut != std::string::npos) raw.erase(cut);
    LineScanner scan{raw, lineno};
    if (scan.done()) continue;

    if (scan.peek() == '[') {
      scan.expect('[');
      const std::string name = scan.ident();
      scan.expect(']');
      if (name == "endogenous") {
        section_default = Tag::Endogenous;
      } else if (name == "exogenous") {
        section_default = Tag::Exogenous;
      } else {
        throw SyntaxError("unknown section [" + name + "]", lineno, 1);
      }
      if (!scan.done()) throw SyntaxError("trailing input after section header", lineno, scan.pos + 1);
      continue;
    }

    GroundAtom atom;
    atom.predicate = scan.ident();
    scan.expect('(');
    atom.args.emplace_back(Constant{scan.constant()});
    while (scan.peek() == ',') {
      scan.expect(',');
      atom.args.emplace_back(Constant{scan.constant()});
    }
    scan.expect(')');
    scan.expect('.');

    Tag tag = section_default;
    if (scan.peek() == '@') {
      scan.expect('@');
      const std::string marker = scan.ident();
      if (marker == "exo") {
        tag = Tag::Exogenous;
      } else if (marker == "endo") {
        tag = Tag::Endogenous;
      } else {
        throw SyntaxError("unknown tag @" + marker, lineno, scan.pos);
      }
    }
    if (!scan.done()) throw SyntaxError("trailing input after fact", lineno, scan.pos + 1);
    atoms.emplace_back(std::move(atom), tag);
  }
  return make_instance(atoms);
}

Instance load_facts_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadArgument, "cannot open facts file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_facts(buffer.str());
}

}  // namespace causerep
