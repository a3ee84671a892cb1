// kpi/parser.hpp - recursive descent parser for the formula text grammar.
//
//   iff     := implies ( "<->" iff )?
//   implies := or ( "->" implies )?
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := ( "~" | "[]" | "<>" ) unary | atom
//   atom    := IDENT | "bot" | "(" iff ")"
//
// IDENT is [a-zA-Z][a-zA-Z0-9_]* other than the keyword "bot".

#ifndef KPI_PARSER_HPP
#define KPI_PARSER_HPP

#include <string_view>

#include "kpi/formula.hpp"

namespace kpi {

/// Throws ParseError with line, column and the expected-token set.
Formula parse(std::string_view text);

}  // namespace kpi

#endif
