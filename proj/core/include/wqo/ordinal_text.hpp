#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wqo/ordinal.hpp"

namespace wqo {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

// Canonical text form, e.g. "w^w*2 + w^2 + 3"; compound exponents are
// parenthesised: "w^(w+1)".  Zero prints as "0".
std::string to_text(const Ordinal& a);

// Grammar:  ord  := term ('+' term)*
//           term := 'w' ('^' atom)? ('*' nat)? | nat
//           atom := nat | 'w' ('^' atom)? | '(' ord ')'
// Input need not be in normal form; the result always is.
Ordinal parse_ordinal(std::string_view text);

// Nested-list JSON form [[exp, coeff], ...] with exp in the same form;
// 0 is [].
nlohmann::json ordinal_to_json(const Ordinal& a);
Ordinal ordinal_from_json(const nlohmann::json& j);

}  // namespace wqo
