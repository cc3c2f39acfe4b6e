#pragma once

// Text formats: function literals, equation-system files and ON-set specs.
//
// Function grammar, loosest to tightest binding:
//   or   := xor ('|' xor)*
//   xor  := and ('^' and)*
//   and  := not ('&' not)*
//   not  := '~' not | atom '\''*
//   atom := identifier | '0' | '1' | '(' or ')'

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolalg.hpp"
#include "onset.hpp"

namespace onsat {

/// Parses one function; new identifiers are interned into symbols.
BoolFunc parse_function(std::string_view text, SymbolTable& symbols);

struct SystemFile {
  SymbolTable symbols;
  std::vector<std::pair<BoolFunc, BoolFunc>> equations;
};

/// One `<expr> = <expr>` per line, `#` comments, optional `vars:` header
/// declaring names (whitespace or comma separated) ahead of the equations.
SystemFile parse_system_file(std::string_view text);

/// `chain: x1,~x3,x5` for a term chain, otherwise `;`-separated functions.
OnSet parse_onset_spec(std::string_view text, SymbolTable& symbols);

}  // namespace onsat
