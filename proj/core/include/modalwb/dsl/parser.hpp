#ifndef MODALWB_DSL_PARSER_HPP_
#define MODALWB_DSL_PARSER_HPP_

#include <string>
#include <string_view>

#include "modalwb/dsl/ast.hpp"

namespace modalwb::dsl {

// Throws Error(Parse) with "line:column: message" on the first syntax error.
Script parse(std::string_view source);

// Canonical text; parse(pretty_print(s)) == s.
std::string pretty_print(const Script& script);
std::string pretty_print(const ElemExpr& e);
std::string pretty_print(const Statement& s);

}  // namespace modalwb::dsl

#endif  // MODALWB_DSL_PARSER_HPP_
