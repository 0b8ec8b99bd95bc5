#pragma once

#include <string>

#include "causerep/core.hpp"

namespace causerep {

// Facts file format:
//
//   line      := fact | section | comment | blank
//   fact      := ident "(" const ("," const)* ")" "." [ "@exo" | "@endo" ]
//   section   := "[endogenous]" | "[exogenous]"
//   comment   := "%" to end of line
//
// A section sets the default tag for the facts that follow; a per-fact
// marker overrides it. Without any section the default is endogenous.
Instance parse_facts(const std::string& text);

Instance load_facts_file(const std::string& path);

}  // namespace causerep
